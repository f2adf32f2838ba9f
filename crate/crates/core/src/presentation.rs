//! Wirtinger-style group and quandle presentations read off a Gauss code.
//!
//! An arc runs from one under-pass to the next along a component. A
//! component with no under-pass is a single arc. Each crossing contributes
//! one relation between its over-arc `b`, the incoming under-arc `a` and the
//! outgoing under-arc `c`:
//!
//! * group, positive crossing: `c = b a b^-1`, emitted as the relator `b a b^-1 c^-1`
//! * group, negative crossing: `c = b^-1 a b`, emitted as `b^-1 a b c^-1`
//! * quandle, positive: `a ▷ b = c`, emitted as the triple `(a, b, c)`
//! * quandle, negative: `a ▷⁻¹ b = c`, i.e. `c ▷ b = a`, emitted as `(c, b, a)`
//!
//! Nothing is simplified.

use serde::Serialize;

use crate::diagram::{LinkDiagram, Role, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PresentationKind {
    Group,
    Quandle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Relation {
    /// A relator: product of signed generators equal to the identity.
    Word(Vec<(String, i32)>),
    /// `(a, b, c)` meaning `a ▷ b = c`.
    Triple(String, String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("presentation serializes")
    }
}

/// Arc labels along a diagram.
#[derive(Clone, Debug)]
pub struct Arcs {
    /// `arc_at[c][i]`: the arc carrying position `i` of component `c`.
    /// For an under-pass this is the incoming arc.
    arc_at: Vec<Vec<usize>>,
    /// `outgoing[c][i]`: for an under-pass, the arc leaving it.
    outgoing: Vec<Vec<usize>>,
    count: usize,
}

impl Arcs {
    pub fn new(d: &LinkDiagram) -> Self {
        let mut arc_at = Vec::new();
        let mut outgoing = Vec::new();
        let mut offset = 0;
        for comp in d.components() {
            let unders: Vec<usize> = comp
                .iter()
                .enumerate()
                .filter(|(_, p)| p.role == Role::Under)
                .map(|(i, _)| i)
                .collect();
            let m = unders.len();
            let mut here = vec![offset; comp.len()];
            let mut out = vec![offset; comp.len()];
            if m > 0 {
                // arc k starts just after unders[k]
                for (i, slot) in here.iter_mut().enumerate() {
                    // last under-pass strictly before i, cyclically
                    let k = match unders.iter().rposition(|&u| u < i) {
                        Some(k) => k,
                        None => m - 1,
                    };
                    *slot = offset + k;
                }
                for (k, &u) in unders.iter().enumerate() {
                    out[u] = offset + k;
                }
            }
            arc_at.push(here);
            outgoing.push(out);
            offset += m.max(1);
        }
        Arcs { arc_at, outgoing, count: offset }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn label(index: usize) -> String {
        format!("x{}", index + 1)
    }
}

/// Number of arcs: one per under-pass, plus one for every component
/// without under-passes.
pub fn arc_count(d: &LinkDiagram) -> usize {
    d.components()
        .iter()
        .map(|c| c.iter().filter(|p| p.role == Role::Under).count().max(1))
        .sum()
}

/// Group and quandle presentations, in that order.
pub fn presentations(d: &LinkDiagram) -> (Presentation, Presentation) {
    let arcs = Arcs::new(d);
    let generators: Vec<String> = (0..arcs.count()).map(Arcs::label).collect();
    let mut group = Vec::new();
    let mut quandle = Vec::new();
    for x in d.crossings() {
        let b = Arcs::label(arcs.arc_at[x.over.0][x.over.1]);
        let a = Arcs::label(arcs.arc_at[x.under.0][x.under.1]);
        let c = Arcs::label(arcs.outgoing[x.under.0][x.under.1]);
        match x.sign {
            Sign::Positive => {
                group.push(Relation::Word(vec![
                    (b.clone(), 1),
                    (a.clone(), 1),
                    (b.clone(), -1),
                    (c.clone(), -1),
                ]));
                quandle.push(Relation::Triple(a, b, c));
            }
            Sign::Negative => {
                group.push(Relation::Word(vec![
                    (b.clone(), -1),
                    (a.clone(), 1),
                    (b.clone(), 1),
                    (c.clone(), -1),
                ]));
                quandle.push(Relation::Triple(c, b, a));
            }
        }
    }
    (
        Presentation {
            kind: PresentationKind::Group,
            generators: generators.clone(),
            relations: group,
        },
        Presentation {
            kind: PresentationKind::Quandle,
            generators,
            relations: quandle,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> (Presentation, Presentation) {
        presentations(&LinkDiagram::parse(s).unwrap())
    }

    fn word(parts: &[(&str, i32)]) -> Relation {
        Relation::Word(parts.iter().map(|(g, e)| (g.to_string(), *e)).collect())
    }

    #[test]
    fn loop_has_one_generator() {
        let (g, q) = pres("@");
        assert_eq!(g.generators, vec!["x1"]);
        assert!(g.relations.is_empty());
        assert_eq!(q.generators.len(), 1);
        assert!(q.relations.is_empty());
    }

    #[test]
    fn kink_collapses_to_one_arc() {
        // O1+ at position 0, U1+ at position 1: the only arc starts after
        // position 1 and wraps round through the over-pass back to it.
        let (g, q) = pres("O1+,U1+");
        assert_eq!(g.generators, vec!["x1"]);
        assert_eq!(g.relations, vec![word(&[("x1", 1), ("x1", 1), ("x1", -1), ("x1", -1)])]);
        assert_eq!(
            q.relations,
            vec![Relation::Triple("x1".into(), "x1".into(), "x1".into())]
        );
    }

    #[test]
    fn trefoil_counts_and_relations() {
        // O1-,U2-,O3-,U1-,O2-,U3-: unders at 1, 3, 5 give arcs
        // x1 = (1,3], x2 = (3,5], x3 = (5,1].
        let (g, q) = pres("O1-,U2-,O3-,U1-,O2-,U3-");
        assert_eq!(g.generators.len(), 3);
        assert_eq!(g.relations.len(), 3);
        // crossing 1: over at 0 lies on x3, under at 3 enters on x1, leaves on x2
        assert_eq!(g.relations[0], word(&[("x3", -1), ("x1", 1), ("x3", 1), ("x2", -1)]));
        assert_eq!(
            q.relations[0],
            Relation::Triple("x2".into(), "x3".into(), "x1".into())
        );
    }

    #[test]
    fn component_without_unders_is_one_arc() {
        let d = LinkDiagram::parse("O1+,O2-/U1+,U2-").unwrap();
        let (g, _) = presentations(&d);
        assert_eq!(g.generators.len(), 3);
        assert_eq!(arc_count(&d), 3);
        // both over-passes sit on x1, the single arc of component 1
        assert_eq!(g.relations[0], word(&[("x1", 1), ("x3", 1), ("x1", -1), ("x2", -1)]));
    }

    #[test]
    fn json_shape() {
        let (g, q) = pres("O1+/U1+");
        assert_eq!(
            g.to_json(),
            r#"{"kind":"group","generators":["x1","x2"],"relations":[[["x1",1],["x2",1],["x1",-1],["x2",-1]]]}"#
        );
        assert_eq!(
            q.to_json(),
            r#"{"kind":"quandle","generators":["x1","x2"],"relations":[["x2","x1","x2"]]}"#
        );
    }
}
