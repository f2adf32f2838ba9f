//! Reidemeister moves as rewrite rules on Gauss codes.
//!
//! Virtual moves do not change a Gauss code, so only the three classical
//! moves appear here. Sites are positions in the stored (canonical)
//! rotation of the diagram the move was enumerated against.
//!
//! * A [`Gap`] is an arc of a component: `position` p means "just before
//!   the pass at p". A component of length L has L gaps (one if empty).
//! * A [`Pair`] names two cyclically adjacent passes: those at `position`
//!   and `position + 1 mod L`.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{LinkDiagram, Pass, Role, Sign, Violation};
use crate::r3::{template_index, R3Template, CATALOG};
use crate::universe::Universe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    #[serde(rename = "R1_add")]
    R1Add,
    #[serde(rename = "R1_remove")]
    R1Remove,
    #[serde(rename = "R2_add")]
    R2Add,
    #[serde(rename = "R2_remove")]
    R2Remove,
    R3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] =
        [MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3];

    /// Moves that never increase the crossing count.
    pub const NON_INCREASING: [MoveKind; 3] = [MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Gap {
    pub component: usize,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Pair {
    pub component: usize,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KinkOrder {
    OverFirst,
    UnderFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "site")]
pub enum Move {
    /// Insert a kink into `gap`.
    #[serde(rename = "R1_add")]
    R1Add { gap: Gap, sign: Sign, order: KinkOrder },
    #[serde(rename = "R1_remove")]
    R1Remove { crossing: u32, pair: Pair },
    /// Push the arc at `over` across the arc at `under`, creating crossings
    /// `a` (first along the over strand, sign `sign`) and `b` (opposite
    /// sign). With `parallel` the under strand meets `a` first. When both
    /// gaps coincide the two blocks are inserted one after the other, the
    /// under block first iff `under_first`.
    #[serde(rename = "R2_add")]
    R2Add { over: Gap, under: Gap, under_first: bool, parallel: bool, sign: Sign },
    #[serde(rename = "R2_remove")]
    R2Remove { crossings: [u32; 2], over: Pair, under: Pair },
    /// `crossings` is `[x, y, z]` as in [`crate::r3`]; `template` indexes
    /// [`CATALOG`] and describes the configuration before the move.
    R3 { crossings: [u32; 3], top: Pair, middle: Pair, bottom: Pair, template: usize },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Add { .. } => MoveKind::R1Add,
            Move::R1Remove { .. } => MoveKind::R1Remove,
            Move::R2Add { .. } => MoveKind::R2Add,
            Move::R2Remove { .. } => MoveKind::R2Remove,
            Move::R3 { .. } => MoveKind::R3,
        }
    }

    /// Change in crossing count.
    pub fn crossing_delta(&self) -> i64 {
        match self.kind() {
            MoveKind::R1Add => 1,
            MoveKind::R1Remove => -1,
            MoveKind::R2Add => 2,
            MoveKind::R2Remove => -2,
            MoveKind::R3 => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move site does not match the diagram: {0}")]
    StaleSite(String),
    #[error("move produced an invalid diagram: {0}")]
    Invalid(#[from] Violation),
}

fn stale(msg: impl Into<String>) -> MoveError {
    MoveError::StaleSite(msg.into())
}

enum Edit<T> {
    Delete { component: usize, position: usize },
    Insert { gap: Gap, items: Vec<T> },
    /// Swap the pair starting at `position`.
    Swap { component: usize, position: usize },
}

fn apply_edits<T: Clone>(components: &[Vec<T>], edits: Vec<Edit<T>>) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = components.to_vec();
    let mut deleted: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut inserts: HashMap<(usize, usize), Vec<T>> = HashMap::new();
    for e in edits {
        match e {
            Edit::Swap { component, position } => {
                let seq = &mut out[component];
                let n = seq.len();
                seq.swap(position, (position + 1) % n);
            }
            Edit::Delete { component, position } => {
                deleted.entry(component).or_default().push(position)
            }
            Edit::Insert { gap, items } => inserts
                .entry((gap.component, gap.position))
                .or_default()
                .extend(items),
        }
    }
    if deleted.is_empty() && inserts.is_empty() {
        return out;
    }
    for (c, seq) in out.iter_mut().enumerate() {
        let dels = deleted.get(&c);
        let n = seq.len();
        let mut rebuilt = Vec::with_capacity(n + 4);
        // an empty component still has the gap at position 0
        for i in 0..n.max(1) {
            if let Some(items) = inserts.get(&(c, i)) {
                rebuilt.extend(items.iter().cloned());
            }
            if let Some(x) = seq.get(i).filter(|_| !dels.is_some_and(|d| d.contains(&i))) {
                rebuilt.push(x.clone());
            }
        }
        *seq = rebuilt;
    }
    out
}

/// Read access shared by diagrams and universes.
trait Sequences {
    fn len_of(&self, component: usize) -> Option<usize>;
    fn id_at(&self, component: usize, position: usize) -> u32;
    fn max_id(&self) -> u32;
}

impl Sequences for LinkDiagram {
    fn len_of(&self, component: usize) -> Option<usize> {
        self.components().get(component).map(Vec::len)
    }
    fn id_at(&self, component: usize, position: usize) -> u32 {
        self.components()[component][position].crossing
    }
    fn max_id(&self) -> u32 {
        self.max_crossing_id()
    }
}

impl Sequences for Universe {
    fn len_of(&self, component: usize) -> Option<usize> {
        self.components().get(component).map(Vec::len)
    }
    fn id_at(&self, component: usize, position: usize) -> u32 {
        self.components()[component][position]
    }
    fn max_id(&self) -> u32 {
        self.components().iter().flatten().copied().max().unwrap_or(0)
    }
}

fn check_gap<S: Sequences>(s: &S, gap: Gap) -> Result<(), MoveError> {
    match s.len_of(gap.component) {
        Some(n) if gap.position < n.max(1) => Ok(()),
        _ => Err(stale(format!("gap {gap:?} out of range"))),
    }
}

/// Ids at the two positions of `pair`.
fn pair_ids<S: Sequences>(s: &S, pair: Pair) -> Result<(u32, u32), MoveError> {
    match s.len_of(pair.component) {
        Some(n) if n >= 2 && pair.position < n => Ok((
            s.id_at(pair.component, pair.position),
            s.id_at(pair.component, (pair.position + 1) % n),
        )),
        _ => Err(stale(format!("pair {pair:?} out of range"))),
    }
}

fn same_set(a: (u32, u32), b: [u32; 2]) -> bool {
    (a.0 == b[0] && a.1 == b[1]) || (a.0 == b[1] && a.1 == b[0])
}

fn fresh_ids<S: Sequences>(s: &S) -> (u32, u32) {
    let m = s.max_id();
    (m + 1, m + 2)
}

/// Structural checks that only look at crossing ids, then the edit list.
fn plan<S: Sequences>(s: &S, m: &Move) -> Result<Vec<Edit<Pass>>, MoveError> {
    let pair_edit_delete = |p: Pair, n: usize| {
        [
            Edit::Delete { component: p.component, position: p.position },
            Edit::Delete { component: p.component, position: (p.position + 1) % n },
        ]
    };
    match *m {
        Move::R1Add { gap, sign, order } => {
            check_gap(s, gap)?;
            let (id, _) = fresh_ids(s);
            let items = match order {
                KinkOrder::OverFirst => vec![Pass::over(id, sign), Pass::under(id, sign)],
                KinkOrder::UnderFirst => vec![Pass::under(id, sign), Pass::over(id, sign)],
            };
            Ok(vec![Edit::Insert { gap, items }])
        }
        Move::R1Remove { crossing, pair } => {
            let ids = pair_ids(s, pair)?;
            if ids != (crossing, crossing) {
                return Err(stale(format!("no kink of crossing {crossing} at {pair:?}")));
            }
            let n = s.len_of(pair.component).unwrap();
            Ok(pair_edit_delete(pair, n).into_iter().collect())
        }
        Move::R2Add { over, under, under_first, parallel, sign } => {
            check_gap(s, over)?;
            check_gap(s, under)?;
            if under_first && over != under {
                return Err(stale("under_first needs a single gap"));
            }
            let (a, b) = fresh_ids(s);
            let over_block = vec![Pass::over(a, sign), Pass::over(b, sign.flip())];
            let under_block = if parallel {
                vec![Pass::under(a, sign), Pass::under(b, sign.flip())]
            } else {
                vec![Pass::under(b, sign.flip()), Pass::under(a, sign)]
            };
            if over == under {
                let items = if under_first {
                    [under_block, over_block].concat()
                } else {
                    [over_block, under_block].concat()
                };
                Ok(vec![Edit::Insert { gap: over, items }])
            } else {
                Ok(vec![
                    Edit::Insert { gap: over, items: over_block },
                    Edit::Insert { gap: under, items: under_block },
                ])
            }
        }
        Move::R2Remove { crossings, over, under } => {
            if crossings[0] == crossings[1] {
                return Err(stale("R2 needs two crossings"));
            }
            if !same_set(pair_ids(s, over)?, crossings) || !same_set(pair_ids(s, under)?, crossings)
            {
                return Err(stale(format!("crossings {crossings:?} are not adjacent as recorded")));
            }
            let no = s.len_of(over.component).unwrap();
            let nu = s.len_of(under.component).unwrap();
            Ok(pair_edit_delete(over, no).into_iter().chain(pair_edit_delete(under, nu)).collect())
        }
        Move::R3 { crossings: [x, y, z], top, middle, bottom, template } => {
            if x == y || y == z || x == z {
                return Err(stale("R3 needs three crossings"));
            }
            if template >= CATALOG.len() {
                return Err(stale(format!("unknown R3 template {template}")));
            }
            let t = CATALOG[template];
            let ordered = |first: bool, a: u32, b: u32| if first { (a, b) } else { (b, a) };
            if pair_ids(s, top)? != ordered(t.top_x_first, x, y)
                || pair_ids(s, middle)? != ordered(t.middle_x_first, x, z)
                || pair_ids(s, bottom)? != ordered(t.bottom_y_first, y, z)
            {
                return Err(stale("R3 strands do not match the template"));
            }
            Ok([top, middle, bottom]
                .into_iter()
                .map(|p| Edit::Swap { component: p.component, position: p.position })
                .collect())
        }
    }
}

fn pass_at(d: &LinkDiagram, pair: Pair, second: bool) -> Pass {
    let comp = &d.components()[pair.component];
    comp[(pair.position + second as usize) % comp.len()]
}

/// Role and sign checks on top of [`plan`].
fn check_roles(d: &LinkDiagram, m: &Move) -> Result<(), MoveError> {
    match *m {
        Move::R2Remove { over, under, .. } => {
            let (o1, o2) = (pass_at(d, over, false), pass_at(d, over, true));
            let (u1, u2) = (pass_at(d, under, false), pass_at(d, under, true));
            if o1.role != Role::Over || o2.role != Role::Over {
                return Err(stale("R2 over strand is not over at both crossings"));
            }
            if u1.role != Role::Under || u2.role != Role::Under {
                return Err(stale("R2 under strand is not under at both crossings"));
            }
            if o1.sign == o2.sign {
                return Err(stale("R2 crossings must have opposite signs"));
            }
            Ok(())
        }
        Move::R3 { crossings, top, middle, bottom, template } => {
            let roles = |p: Pair| (pass_at(d, p, false), pass_at(d, p, true));
            let t = CATALOG[template];
            let (t1, t2) = roles(top);
            let (m1, m2) = roles(middle);
            let (b1, b2) = roles(bottom);
            let middle_x = if t.middle_x_first { m1 } else { m2 };
            let middle_z = if t.middle_x_first { m2 } else { m1 };
            let ok = t1.role == Role::Over
                && t2.role == Role::Over
                && middle_x.role == Role::Under
                && middle_z.role == Role::Over
                && b1.role == Role::Under
                && b2.role == Role::Under;
            if !ok {
                return Err(stale("R3 roles do not match top/middle/bottom"));
            }
            let sign_of = |id: u32| {
                [t1, t2, m1, m2, b1, b2].into_iter().find(|p| p.crossing == id).unwrap().sign
            };
            if crossings.map(sign_of) != t.signs {
                return Err(stale("R3 signs do not match the template"));
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// Raw result of a move, before validation and re-rotation.
pub fn apply_raw(d: &LinkDiagram, m: &Move) -> Result<Vec<Vec<Pass>>, MoveError> {
    let edits = plan(d, m)?;
    check_roles(d, m)?;
    Ok(apply_edits(d.components(), edits))
}

pub fn apply_move(d: &LinkDiagram, m: &Move) -> Result<LinkDiagram, MoveError> {
    Ok(LinkDiagram::new(apply_raw(d, m)?)?)
}

/// The same move on the shadow: over/under and signs are ignored, only the
/// crossing-id structure of the site is checked.
pub fn apply_to_universe(u: &Universe, m: &Move) -> Result<Universe, MoveError> {
    let edits: Vec<Edit<u32>> = plan(u, m)?
        .into_iter()
        .map(|e| match e {
            Edit::Delete { component, position } => Edit::Delete { component, position },
            Edit::Swap { component, position } => Edit::Swap { component, position },
            Edit::Insert { gap, items } => {
                Edit::Insert { gap, items: items.into_iter().map(|p| p.crossing).collect() }
            }
        })
        .collect();
    Ok(Universe::from_components(apply_edits(u.components(), edits)))
}

fn gaps(d: &LinkDiagram) -> Vec<Gap> {
    d.components()
        .iter()
        .enumerate()
        .flat_map(|(c, comp)| (0..comp.len().max(1)).map(move |p| Gap { component: c, position: p }))
        .collect()
}

/// Start of the pair formed by positions `i` and `j` of a component of
/// length `n`, if they are cyclically adjacent.
fn pair_start(i: usize, j: usize, n: usize) -> Option<usize> {
    if n == 2 {
        Some(0)
    } else if (i + 1) % n == j {
        Some(i)
    } else if (j + 1) % n == i {
        Some(j)
    } else {
        None
    }
}

/// Starts of the adjacent pairs containing the pass at (c, i). A component
/// of length 2 yields both readings of its single pair.
fn pairs_through(d: &LinkDiagram, c: usize, i: usize) -> Vec<usize> {
    let n = d.components()[c].len();
    if n < 2 {
        return Vec::new();
    }
    vec![i, (i + n - 1) % n]
}

/// All applicable moves of the requested kinds, sorted by kind then site.
pub fn enumerate_moves(d: &LinkDiagram, kinds: &[MoveKind]) -> Vec<Move> {
    let mut out = Vec::new();
    let want = |k: MoveKind| kinds.contains(&k);
    let crossings = d.crossings();
    let comps = d.components();

    if want(MoveKind::R1Add) {
        for gap in gaps(d) {
            for sign in [Sign::Positive, Sign::Negative] {
                for order in [KinkOrder::OverFirst, KinkOrder::UnderFirst] {
                    out.push(Move::R1Add { gap, sign, order });
                }
            }
        }
    }

    if want(MoveKind::R1Remove) {
        for x in &crossings {
            if x.over.0 != x.under.0 {
                continue;
            }
            let c = x.over.0;
            if let Some(p) = pair_start(x.over.1, x.under.1, comps[c].len()) {
                out.push(Move::R1Remove { crossing: x.id, pair: Pair { component: c, position: p } });
            }
        }
    }

    if want(MoveKind::R2Add) {
        let gs = gaps(d);
        for &over in &gs {
            for &under in &gs {
                let firsts: &[bool] = if over == under { &[false, true] } else { &[false] };
                for &under_first in firsts {
                    for parallel in [false, true] {
                        for sign in [Sign::Positive, Sign::Negative] {
                            out.push(Move::R2Add { over, under, under_first, parallel, sign });
                        }
                    }
                }
            }
        }
    }

    if want(MoveKind::R2Remove) {
        for (i, a) in crossings.iter().enumerate() {
            for b in &crossings[i + 1..] {
                if a.sign == b.sign || a.over.0 != b.over.0 || a.under.0 != b.under.0 {
                    continue;
                }
                let (co, cu) = (a.over.0, a.under.0);
                let (Some(po), Some(pu)) = (
                    pair_start(a.over.1, b.over.1, comps[co].len()),
                    pair_start(a.under.1, b.under.1, comps[cu].len()),
                ) else {
                    continue;
                };
                let first = comps[co][po].crossing;
                let second = if first == a.id { b.id } else { a.id };
                out.push(Move::R2Remove {
                    crossings: [first, second],
                    over: Pair { component: co, position: po },
                    under: Pair { component: cu, position: pu },
                });
            }
        }
    }

    if want(MoveKind::R3) {
        let by_id: HashMap<u32, &crate::diagram::Crossing> =
            crossings.iter().map(|x| (x.id, x)).collect();
        for (c, comp) in comps.iter().enumerate() {
            let n = comp.len();
            if n < 2 {
                continue;
            }
            for p in 0..n {
                let (first, second) = (comp[p], comp[(p + 1) % n]);
                if first.role != Role::Over || second.role != Role::Over || first.crossing == second.crossing {
                    continue;
                }
                let top = Pair { component: c, position: p };
                for (x, y, top_x_first) in
                    [(first.crossing, second.crossing, true), (second.crossing, first.crossing, false)]
                {
                    let (xc, yc) = (by_id[&x], by_id[&y]);
                    // bottom: under-pass of y next to the under-pass of some z
                    for bstart in pairs_through(d, yc.under.0, yc.under.1) {
                        let bc = yc.under.0;
                        let bn = comps[bc].len();
                        let (b1, b2) = (comps[bc][bstart], comps[bc][(bstart + 1) % bn]);
                        if b1.role != Role::Under || b2.role != Role::Under {
                            continue;
                        }
                        let z = if b1.crossing == y { b2.crossing } else if b2.crossing == y { b1.crossing } else { continue };
                        if z == x || z == y {
                            continue;
                        }
                        let zc = by_id[&z];
                        // middle: under-pass of x next to the over-pass of z
                        if xc.under.0 != zc.over.0 {
                            continue;
                        }
                        for mstart in pairs_through(d, xc.under.0, xc.under.1) {
                            let mc = xc.under.0;
                            let mn = comps[mc].len();
                            let (m1, m2) = (comps[mc][mstart], comps[mc][(mstart + 1) % mn]);
                            let middle_x_first = if m1.crossing == x && m2.crossing == z && m2.role == Role::Over {
                                true
                            } else if m2.crossing == x && m1.crossing == z && m1.role == Role::Over {
                                false
                            } else {
                                continue;
                            };
                            let pattern = R3Template {
                                top_x_first,
                                middle_x_first,
                                bottom_y_first: b1.crossing == y,
                                signs: [xc.sign, yc.sign, zc.sign],
                            };
                            if let Some(template) = template_index(&pattern) {
                                out.push(Move::R3 {
                                    crossings: [x, y, z],
                                    top,
                                    middle: Pair { component: mc, position: mstart },
                                    bottom: Pair { component: bc, position: bstart },
                                    template,
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::universe;

    fn d(s: &str) -> LinkDiagram {
        LinkDiagram::parse(s).unwrap()
    }

    #[test]
    fn kink_has_one_removal() {
        let kink = d("O1+,U1+");
        let moves = enumerate_moves(&kink, &[MoveKind::R1Remove]);
        assert_eq!(moves.len(), 1);
        assert_eq!(apply_move(&kink, &moves[0]).unwrap(), LinkDiagram::unknot());
    }

    #[test]
    fn unknot_has_no_reducing_moves() {
        assert!(enumerate_moves(&LinkDiagram::unknot(), &MoveKind::NON_INCREASING).is_empty());
    }

    #[test]
    fn add_kink_to_unknot() {
        let m = Move::R1Add {
            gap: Gap { component: 0, position: 0 },
            sign: Sign::Positive,
            order: KinkOrder::OverFirst,
        };
        assert_eq!(apply_move(&LinkDiagram::unknot(), &m).unwrap().to_string(), "O1+,U1+");
    }

    #[test]
    fn r2_round_trip_on_unlink() {
        let two = LinkDiagram::unlink(2);
        let m = Move::R2Add {
            over: Gap { component: 0, position: 0 },
            under: Gap { component: 1, position: 0 },
            under_first: false,
            parallel: true,
            sign: Sign::Positive,
        };
        let linked = apply_move(&two, &m).unwrap();
        assert_eq!(linked.to_string(), "O1+,O2-/U1+,U2-");
        let back = enumerate_moves(&linked, &[MoveKind::R2Remove]);
        assert_eq!(back.len(), 1);
        assert_eq!(apply_move(&linked, &back[0]).unwrap(), two);
    }

    #[test]
    fn r2_same_gap_variants() {
        let u = LinkDiagram::unknot();
        let gap = Gap { component: 0, position: 0 };
        let got: Vec<String> = [(false, false), (false, true), (true, false), (true, true)]
            .into_iter()
            .map(|(under_first, parallel)| {
                let m = Move::R2Add { over: gap, under: gap, under_first, parallel, sign: Sign::Positive };
                apply_move(&u, &m).unwrap().to_string()
            })
            .collect();
        assert_eq!(got, ["O1+,O2-,U2-,U1+", "O1+,O2-,U1+,U2-", "O1+,O2-,U2-,U1+", "O1+,O2-,U1+,U2-"]);
    }

    #[test]
    fn stale_sites_are_rejected() {
        let kink = d("O1+,U1+");
        let m = Move::R1Remove { crossing: 2, pair: Pair { component: 0, position: 0 } };
        assert!(matches!(apply_move(&kink, &m), Err(MoveError::StaleSite(_))));
        let m = Move::R1Add {
            gap: Gap { component: 3, position: 0 },
            sign: Sign::Positive,
            order: KinkOrder::OverFirst,
        };
        assert!(apply_move(&kink, &m).is_err());
        // same-sign pair is not an R2 bigon
        let m = Move::R2Remove {
            crossings: [1, 2],
            over: Pair { component: 0, position: 0 },
            under: Pair { component: 1, position: 0 },
        };
        assert!(apply_move(&d("O1+,O2+/U1+,U2+"), &m).is_err());
    }

    #[test]
    fn r3_on_braid_relation() {
        // closure of s1 s2 s1 on three strands; the whole word is one R3 site
        let d = d("O1+,O2+,U2+,U3+/U1+,O3+");
        let moves = enumerate_moves(&d, &[MoveKind::R3]);
        assert!(!moves.is_empty());
        for m in &moves {
            let after = apply_move(&d, m).unwrap();
            assert_eq!(after.crossing_count(), 3);
            let again = enumerate_moves(&after, &[MoveKind::R3]);
            let back = again.iter().map(|m2| apply_move(&after, m2).unwrap().canonical_key());
            assert!(back.into_iter().any(|k| k == d.canonical_key()));
        }
    }

    #[test]
    fn universe_follows_moves() {
        let d = d("O1+,O2+,U1+,U2+");
        for m in enumerate_moves(&d, &MoveKind::ALL) {
            let after = apply_move(&d, &m).unwrap();
            assert_eq!(universe(&after), apply_to_universe(&universe(&d), &m).unwrap(), "{m:?}");
        }
    }

    #[test]
    fn move_json() {
        let m = Move::R1Remove { crossing: 1, pair: Pair { component: 0, position: 0 } };
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"kind":"R1_remove","site":{"crossing":1,"pair":{"component":0,"position":0}}}"#
        );
    }
}
