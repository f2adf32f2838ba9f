//! The disk-band surface of a Gauss code and its genus.
//!
//! Every classical crossing becomes a disk with four slots and every arc of
//! the diagram (the stretch between two consecutive passes) becomes an
//! untwisted band. Crossingless components become annuli. Capping each
//! boundary circle of this surface with a disk gives the closed surface of
//! least genus carrying the diagram.
//!
//! Slot order at a disk, counterclockwise:
//!
//! * positive crossing: over-in, under-in, over-out, under-out
//! * negative crossing: over-in, under-out, over-out, under-in

use serde::Serialize;

use crate::diagram::{LinkDiagram, Role, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Slot {
    OverIn,
    UnderIn,
    OverOut,
    UnderOut,
}

impl Slot {
    fn new(role: Role, incoming: bool) -> Slot {
        match (role, incoming) {
            (Role::Over, true) => Slot::OverIn,
            (Role::Over, false) => Slot::OverOut,
            (Role::Under, true) => Slot::UnderIn,
            (Role::Under, false) => Slot::UnderOut,
        }
    }
}

pub fn rotation(sign: Sign) -> [Slot; 4] {
    match sign {
        Sign::Positive => [Slot::OverIn, Slot::UnderIn, Slot::OverOut, Slot::UnderOut],
        Sign::Negative => [Slot::OverIn, Slot::UnderOut, Slot::OverOut, Slot::UnderIn],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disk {
    pub crossing: u32,
    pub sign: Sign,
    pub rotation: [Slot; 4],
}

/// A band end: disk index and slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct End {
    pub disk: usize,
    pub slot: Slot,
}

/// The band following the arc from position `position` to the next pass
/// along `component`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Band {
    pub component: usize,
    pub position: usize,
    pub from: End,
    pub to: End,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonSurface {
    pub disks: Vec<Disk>,
    pub bands: Vec<Band>,
    /// Components (by index) with no crossings.
    pub annuli: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strip {
    Band(usize),
    Annulus(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BandSide {
    pub strip: Strip,
    pub side: Side,
}

pub type BoundaryCircle = Vec<BandSide>;

pub fn build_ribbon(d: &LinkDiagram) -> RibbonSurface {
    let crossings = d.crossings();
    let mut disk_of = std::collections::HashMap::new();
    let disks: Vec<Disk> = crossings
        .iter()
        .enumerate()
        .map(|(i, x)| {
            disk_of.insert(x.id, i);
            Disk { crossing: x.id, sign: x.sign, rotation: rotation(x.sign) }
        })
        .collect();
    let mut bands = Vec::new();
    let mut annuli = Vec::new();
    for (c, comp) in d.components().iter().enumerate() {
        if comp.is_empty() {
            annuli.push(c);
            continue;
        }
        for (i, pass) in comp.iter().enumerate() {
            let next = comp[(i + 1) % comp.len()];
            bands.push(Band {
                component: c,
                position: i,
                from: End { disk: disk_of[&pass.crossing], slot: Slot::new(pass.role, false) },
                to: End { disk: disk_of[&next.crossing], slot: Slot::new(next.role, true) },
            });
        }
    }
    RibbonSurface { disks, bands, annuli }
}

impl RibbonSurface {
    pub fn euler_characteristic(&self) -> i64 {
        self.disks.len() as i64 - self.bands.len() as i64
    }

    fn dart(&self, end: End) -> usize {
        let k = self.disks[end.disk]
            .rotation
            .iter()
            .position(|&s| s == end.slot)
            .expect("slot in rotation");
        end.disk * 4 + k
    }

    /// For each dart (disk * 4 + rotation index): the band attached there
    /// and whether this is the band's `from` end.
    fn dart_bands(&self) -> Vec<(usize, bool)> {
        let mut table = vec![(usize::MAX, false); self.disks.len() * 4];
        for (b, band) in self.bands.iter().enumerate() {
            table[self.dart(band.from)] = (b, true);
            table[self.dart(band.to)] = (b, false);
        }
        table
    }

    /// Boundary circles of the surface.
    ///
    /// Leaving a disk through a dart, cross the band to its other end, then
    /// step to the next slot counterclockwise. Leaving through the `from`
    /// end traverses the band's left side, through the `to` end its right
    /// side. Each annulus contributes its two sides as separate circles.
    pub fn boundary_walk(&self) -> Vec<BoundaryCircle> {
        let table = self.dart_bands();
        let other_end = |dart: usize| -> usize {
            let (b, is_from) = table[dart];
            let band = &self.bands[b];
            self.dart(if is_from { band.to } else { band.from })
        };
        let mut seen = vec![false; table.len()];
        let mut circles = Vec::new();
        for start in 0..table.len() {
            if seen[start] {
                continue;
            }
            let mut circle = Vec::new();
            let mut dart = start;
            while !seen[dart] {
                seen[dart] = true;
                let (b, is_from) = table[dart];
                circle.push(BandSide {
                    strip: Strip::Band(b),
                    side: if is_from { Side::Left } else { Side::Right },
                });
                let arrive = other_end(dart);
                dart = (arrive / 4) * 4 + (arrive % 4 + 1) % 4;
            }
            circles.push(circle);
        }
        for &a in &self.annuli {
            for side in [Side::Left, Side::Right] {
                circles.push(vec![BandSide { strip: Strip::Annulus(a), side }]);
            }
        }
        circles
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceReport {
    pub components: Vec<usize>,
    pub chi: i64,
    pub boundary: usize,
    pub genus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    #[serde(rename = "chi")]
    pub euler_characteristic: i64,
    #[serde(rename = "boundary")]
    pub boundary_components: usize,
    #[serde(rename = "genus")]
    pub canonical_genus: usize,
    pub pieces: Vec<PieceReport>,
}

impl SurfaceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Euler characteristic, boundary count and genus, per connected piece and
/// in total. Pieces are listed in order of their first component.
pub fn surface_report(d: &LinkDiagram) -> SurfaceReport {
    let s = build_ribbon(d);
    let n = d.component_count();
    // union-find over components; crossings glue the components they join
    let mut parent: Vec<usize> = (0..n).collect();
    for x in d.crossings() {
        let (a, b) = (find(&mut parent, x.over.0), find(&mut parent, x.under.0));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let roots: Vec<usize> = (0..n).map(|c| find(&mut parent, c)).collect();
    let mut piece_ids: Vec<usize> = Vec::new();
    for &r in &roots {
        if !piece_ids.contains(&r) {
            piece_ids.push(r);
        }
    }
    let piece_of_component = |c: usize| piece_ids.iter().position(|&r| r == roots[c]).unwrap();
    let mut pieces: Vec<PieceReport> = piece_ids
        .iter()
        .map(|_| PieceReport { components: Vec::new(), chi: 0, boundary: 0, genus: 0 })
        .collect();
    for c in 0..n {
        pieces[piece_of_component(c)].components.push(c);
    }
    let crossings = d.crossings();
    for x in &crossings {
        pieces[piece_of_component(x.over.0)].chi += 1;
    }
    for band in &s.bands {
        pieces[piece_of_component(band.component)].chi -= 1;
    }
    for circle in s.boundary_walk() {
        let comp = match circle[0].strip {
            Strip::Band(b) => s.bands[b].component,
            Strip::Annulus(c) => c,
        };
        pieces[piece_of_component(comp)].boundary += 1;
    }
    for p in &mut pieces {
        let twice = 2 - p.chi - p.boundary as i64;
        debug_assert!(twice >= 0 && twice % 2 == 0, "orientable surface");
        p.genus = (twice / 2) as usize;
    }
    SurfaceReport {
        euler_characteristic: pieces.iter().map(|p| p.chi).sum(),
        boundary_components: pieces.iter().map(|p| p.boundary).sum(),
        canonical_genus: pieces.iter().map(|p| p.genus).sum(),
        pieces,
    }
}

/// True iff the canonical surface of every piece is a sphere with holes,
/// i.e. the Gauss code comes from a diagram drawn on the plane.
pub fn is_classically_realizable(d: &LinkDiagram) -> bool {
    surface_report(d).pieces.iter().all(|p| p.genus == 0)
}
