//! Linking numbers and the link-homology classification.
//!
//! `Link(j, k)` counts, with sign, the crossings where component `j` passes
//! over component `k`. For virtual links it need not equal `Link(k, j)`.
//! The off-diagonal entries are unchanged by every Reidemeister move and
//! determine the virtual link-homology class completely.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{LinkDiagram, Pass, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("component index {index} out of range for {count} component(s)")]
    OutOfRange { index: usize, count: usize },
    #[error("linking number needs two distinct components; use self_writhe")]
    SameComponent,
}

/// Square integer matrix indexed by component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkingMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    fn zeros(n: usize) -> Self {
        LinkingMatrix { n, entries: vec![0; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry (j, k), 0-based.
    pub fn get(&self, j: usize, k: usize) -> i64 {
        self.entries[j * self.n + k]
    }

    fn add(&mut self, j: usize, k: usize, v: i64) {
        self.entries[j * self.n + k] += v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// Copy with the diagonal set to zero.
    pub fn off_diagonal(&self) -> LinkingMatrix {
        let mut m = self.clone();
        for j in 0..self.n {
            m.entries[j * self.n + j] = 0;
        }
        m
    }
}

impl Serialize for LinkingMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.n))?;
        for row in self.entries.chunks(self.n) {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

fn check_index(d: &LinkDiagram, index: usize) -> Result<(), IndexError> {
    let count = d.component_count();
    if index < count {
        Ok(())
    } else {
        Err(IndexError::OutOfRange { index, count })
    }
}

/// `Link(j, k)` with 0-based component indices.
pub fn linking_number(d: &LinkDiagram, j: usize, k: usize) -> Result<i64, IndexError> {
    check_index(d, j)?;
    check_index(d, k)?;
    if j == k {
        return Err(IndexError::SameComponent);
    }
    Ok(d
        .crossings()
        .iter()
        .filter(|x| x.over.0 == j && x.under.0 == k)
        .map(|x| x.sign.value())
        .sum())
}

/// Signed count of crossings with both passes on component `j`.
pub fn self_writhe(d: &LinkDiagram, j: usize) -> Result<i64, IndexError> {
    check_index(d, j)?;
    Ok(d
        .crossings()
        .iter()
        .filter(|x| x.over.0 == j && x.under.0 == j)
        .map(|x| x.sign.value())
        .sum())
}

/// Off-diagonal: linking numbers. Diagonal: self-writhe, which is not a
/// link invariant (R1 moves change it by one).
pub fn linking_matrix(d: &LinkDiagram) -> LinkingMatrix {
    let mut m = LinkingMatrix::zeros(d.component_count());
    for x in d.crossings() {
        m.add(x.over.0, x.under.0, x.sign.value());
    }
    m
}

/// Virtual link-homology class: component count and the off-diagonal
/// linking numbers. Serialized as a matrix with a zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HomologyClass {
    matrix: LinkingMatrix,
}

impl HomologyClass {
    pub fn component_count(&self) -> usize {
        self.matrix.size()
    }

    pub fn link(&self, j: usize, k: usize) -> i64 {
        self.matrix.get(j, k)
    }

    pub fn matrix(&self) -> &LinkingMatrix {
        &self.matrix
    }
}

pub fn homology_class(d: &LinkDiagram) -> HomologyClass {
    HomologyClass { matrix: linking_matrix(d).off_diagonal() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomologyVerdict {
    Homologous,
    NotHomologous,
    /// Different component counts; the classification does not apply.
    Incomparable,
}

pub fn compare_homology(a: &LinkDiagram, b: &LinkDiagram) -> HomologyVerdict {
    if a.component_count() != b.component_count() {
        return HomologyVerdict::Incomparable;
    }
    if homology_class(a) == homology_class(b) {
        HomologyVerdict::Homologous
    } else {
        HomologyVerdict::NotHomologous
    }
}

/// The pseudo-Hopf link split off at one crossing: `upper` is the
/// component passing over, `lower` the one passing under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Atom {
    pub crossing: u32,
    pub upper: usize,
    pub lower: usize,
    pub sign: Sign,
}

/// A positive and a negative atom of the same (upper, lower) family
/// annihilating each other. `None` stands for a kink introduced by
/// first-move normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cancellation {
    pub upper: usize,
    pub lower: usize,
    pub positive: Option<u32>,
    pub negative: Option<u32>,
}

/// Self-crossing bookkeeping for one component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SelfNormalization {
    pub component: usize,
    pub positive: usize,
    pub negative: usize,
    /// `positive - negative`: the surplus to be balanced by kinks.
    pub surplus: i64,
    /// Kinks added, each of sign opposite to the surplus.
    pub kinks_added: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NetCount {
    pub upper: usize,
    pub lower: usize,
    pub count: i64,
}

/// Constructive normal form for link homology.
///
/// Every crossing is cut out as a pseudo-Hopf atom, leaving one trivial
/// circle per component, which is capped. Atoms of a family (upper, lower)
/// with opposite signs cancel in pairs. Families with upper = lower are
/// first balanced by adding kinks, after which they cancel completely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoHopfDecomposition {
    pub components: usize,
    pub atoms: Vec<Atom>,
    pub normalizations: Vec<SelfNormalization>,
    pub cancellations: Vec<Cancellation>,
    /// Surviving pseudo-Hopf links per ordered pair, nonzero entries only,
    /// ordered by (upper, lower).
    pub net: Vec<NetCount>,
    pub capped_trivial: usize,
}

impl PseudoHopfDecomposition {
    pub fn net_count(&self, upper: usize, lower: usize) -> i64 {
        self.net
            .iter()
            .find(|c| c.upper == upper && c.lower == lower)
            .map_or(0, |c| c.count)
    }

    pub fn is_empty(&self) -> bool {
        self.net.is_empty()
    }

    /// The surviving pseudo-Hopf links band-summed onto trivial circles:
    /// a diagram whose j-th component passes over the k-th component
    /// `|net(j,k)|` times with the sign of `net(j,k)`, and nothing else.
    /// Equal for any two diagrams in the same homology class.
    pub fn normal_form(&self) -> LinkDiagram {
        let mut comps: Vec<Vec<Pass>> = vec![Vec::new(); self.components];
        let mut id = 0;
        for c in &self.net {
            let sign = if c.count > 0 { Sign::Positive } else { Sign::Negative };
            for _ in 0..c.count.unsigned_abs() {
                id += 1;
                comps[c.upper].push(Pass::over(id, sign));
                comps[c.lower].push(Pass::under(id, sign));
            }
        }
        LinkDiagram::new(comps).expect("normal form is a valid Gauss code")
    }
}

pub fn pseudo_hopf_decomposition(d: &LinkDiagram) -> PseudoHopfDecomposition {
    let n = d.component_count();
    let atoms: Vec<Atom> = d
        .crossings()
        .into_iter()
        .map(|x| Atom { crossing: x.id, upper: x.over.0, lower: x.under.0, sign: x.sign })
        .collect();

    // atoms keep serialization order inside each (upper, lower) family
    let mut families: BTreeMap<(usize, usize), (Vec<u32>, Vec<u32>)> = BTreeMap::new();
    for a in &atoms {
        let fam = families.entry((a.upper, a.lower)).or_default();
        match a.sign {
            Sign::Positive => fam.0.push(a.crossing),
            Sign::Negative => fam.1.push(a.crossing),
        }
    }

    let mut normalizations = Vec::new();
    let mut cancellations = Vec::new();
    let mut net = Vec::new();
    for (&(upper, lower), (pos, neg)) in &families {
        let matched = pos.len().min(neg.len());
        for i in 0..matched {
            cancellations.push(Cancellation {
                upper,
                lower,
                positive: Some(pos[i]),
                negative: Some(neg[i]),
            });
        }
        let surplus = pos.len() as i64 - neg.len() as i64;
        if upper == lower {
            normalizations.push(SelfNormalization {
                component: upper,
                positive: pos.len(),
                negative: neg.len(),
                surplus,
                kinks_added: surplus.unsigned_abs() as usize,
            });
            // leftovers cancel against the added kinks
            for &c in &pos[matched..] {
                cancellations.push(Cancellation { upper, lower, positive: Some(c), negative: None });
            }
            for &c in &neg[matched..] {
                cancellations.push(Cancellation { upper, lower, positive: None, negative: Some(c) });
            }
        } else if surplus != 0 {
            net.push(NetCount { upper, lower, count: surplus });
        }
    }

    PseudoHopfDecomposition {
        components: n,
        atoms,
        normalizations,
        cancellations,
        net,
        capped_trivial: n,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalityVerdict {
    NonClassical,
    Inconclusive,
}

/// Classical links have `Link(j, k) = Link(k, j)` for every pair, so an
/// asymmetric pair proves a diagram is not equivalent to a classical one.
/// Symmetry proves nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalityCertificate {
    pub verdict: ClassicalityVerdict,
    /// 0-based (j, k) with `Link(j, k) != Link(k, j)`.
    pub witness: Option<(usize, usize)>,
}

impl Serialize for ClassicalityCertificate {
    /// Witness indices are written 1-based.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ClassicalityCertificate", 2)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("witness", &self.witness.map(|(j, k)| [j + 1, k + 1]))?;
        st.end()
    }
}

pub fn classicality_certificate(d: &LinkDiagram) -> ClassicalityCertificate {
    let m = linking_matrix(d);
    let n = m.size();
    for j in 0..n {
        for k in j + 1..n {
            if m.get(j, k) != m.get(k, j) {
                return ClassicalityCertificate {
                    verdict: ClassicalityVerdict::NonClassical,
                    witness: Some((j, k)),
                };
            }
        }
    }
    ClassicalityCertificate { verdict: ClassicalityVerdict::Inconclusive, witness: None }
}
