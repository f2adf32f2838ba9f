//! Multi-component Gauss codes.
//!
//! A [`LinkDiagram`] is an ordered list of components, each a cyclic
//! sequence of [`Pass`]es. Virtual crossings leave no trace in a Gauss code,
//! so only classical crossings appear. Components are stored in their
//! canonical rotation, which makes structural equality the same thing as
//! equality of cyclic sequences.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn flip(self) -> Role {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// One visit of a component to a classical crossing.
///
/// Field order matters: the derived `Ord` is the (role, crossing, sign)
/// order used to pick canonical rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pass {
    pub role: Role,
    pub crossing: u32,
    pub sign: Sign,
}

impl Pass {
    pub fn new(crossing: u32, role: Role, sign: Sign) -> Self {
        Pass { role, crossing, sign }
    }

    pub fn over(crossing: u32, sign: Sign) -> Self {
        Pass::new(crossing, Role::Over, sign)
    }

    pub fn under(crossing: u32, sign: Sign) -> Self {
        Pass::new(crossing, Role::Under, sign)
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.role.letter(), self.crossing, self.sign.symbol())
    }
}

/// The first broken invariant found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("a diagram needs at least one component")]
    NoComponents,
    #[error("crossing id 0 is not allowed")]
    ZeroId,
    #[error("crossing {crossing} occurs {count} time(s), expected exactly 2")]
    OddOccurrence { crossing: u32, count: usize },
    #[error("crossing {crossing} is passed twice as {role:?}")]
    DuplicateRole { crossing: u32, role: Role },
    #[error("crossing {crossing} carries both signs")]
    SignMismatch { crossing: u32 },
}

impl Violation {
    /// Short machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::NoComponents => "no-components",
            Violation::ZeroId => "zero-id",
            Violation::OddOccurrence { .. } => "odd-occurrence",
            Violation::DuplicateRole { .. } => "duplicate-role",
            Violation::SignMismatch { .. } => "sign-mismatch",
        }
    }

    pub fn crossing(&self) -> Option<u32> {
        match *self {
            Violation::NoComponents => None,
            Violation::ZeroId => Some(0),
            Violation::OddOccurrence { crossing, .. }
            | Violation::DuplicateRole { crossing, .. }
            | Violation::SignMismatch { crossing } => Some(crossing),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "violation": self.kind(),
            "crossing": self.crossing(),
            "message": self.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `column` is 1-based.
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("invalid diagram: {0}")]
    Invalid(#[from] Violation),
}

/// Checks the Gauss-code invariants on raw component data.
///
/// Crossings are examined in order of first appearance; within a crossing
/// the occurrence count is checked before roles, and roles before signs.
pub fn validate(components: &[Vec<Pass>]) -> Result<(), Violation> {
    if components.is_empty() {
        return Err(Violation::NoComponents);
    }
    let mut order: Vec<u32> = Vec::new();
    let mut seen: HashMap<u32, Vec<Pass>> = HashMap::new();
    for pass in components.iter().flatten() {
        if pass.crossing == 0 {
            return Err(Violation::ZeroId);
        }
        let entry = seen.entry(pass.crossing).or_insert_with(|| {
            order.push(pass.crossing);
            Vec::new()
        });
        entry.push(*pass);
    }
    for id in order {
        let passes = &seen[&id];
        if passes.len() != 2 {
            return Err(Violation::OddOccurrence { crossing: id, count: passes.len() });
        }
        if passes[0].role == passes[1].role {
            return Err(Violation::DuplicateRole { crossing: id, role: passes[0].role });
        }
        if passes[0].sign != passes[1].sign {
            return Err(Violation::SignMismatch { crossing: id });
        }
    }
    Ok(())
}

/// Index of the lexicographically least rotation of `seq`.
pub(crate) fn least_rotation<T: Ord>(seq: &[T]) -> usize {
    let n = seq.len();
    let mut best = 0;
    for start in 1..n {
        let cmp = (0..n)
            .map(|i| seq[(start + i) % n].cmp(&seq[(best + i) % n]))
            .find(|c| c.is_ne());
        if cmp == Some(std::cmp::Ordering::Less) {
            best = start;
        }
    }
    best
}

pub(crate) fn rotate_to_least<T: Ord>(mut seq: Vec<T>) -> Vec<T> {
    let start = least_rotation(&seq);
    seq.rotate_left(start);
    seq
}

/// Where the two passes of one crossing sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub id: u32,
    pub sign: Sign,
    /// (component, position) of the over-pass.
    pub over: (usize, usize),
    /// (component, position) of the under-pass.
    pub under: (usize, usize),
}

/// A validated virtual link diagram in Gauss-code form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    components: Vec<Vec<Pass>>,
}

impl LinkDiagram {
    /// Validates `components` and rotates each one to its canonical start.
    pub fn new(components: Vec<Vec<Pass>>) -> Result<Self, Violation> {
        validate(&components)?;
        Ok(LinkDiagram {
            components: components.into_iter().map(rotate_to_least).collect(),
        })
    }

    /// `n` crossingless loops.
    pub fn unlink(n: usize) -> Self {
        assert!(n >= 1, "a diagram needs at least one component");
        LinkDiagram { components: vec![Vec::new(); n] }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let raw = parse_components(text)?;
        Ok(LinkDiagram::new(raw)?)
    }

    pub fn components(&self) -> &[Vec<Pass>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_crossing_id(&self) -> u32 {
        self.components.iter().flatten().map(|p| p.crossing).max().unwrap_or(0)
    }

    /// Crossings in order of first appearance along the serialization.
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut order = Vec::new();
        type Seen = (Option<(usize, usize)>, Option<(usize, usize)>, Sign);
        let mut slots: HashMap<u32, Seen> = HashMap::new();
        for (c, comp) in self.components.iter().enumerate() {
            for (i, pass) in comp.iter().enumerate() {
                let slot = slots.entry(pass.crossing).or_insert_with(|| {
                    order.push(pass.crossing);
                    (None, None, pass.sign)
                });
                match pass.role {
                    Role::Over => slot.0 = Some((c, i)),
                    Role::Under => slot.1 = Some((c, i)),
                }
            }
        }
        order
            .into_iter()
            .map(|id| {
                let (over, under, sign) = slots[&id];
                Crossing {
                    id,
                    sign,
                    over: over.expect("validated diagram"),
                    under: under.expect("validated diagram"),
                }
            })
            .collect()
    }

    /// Canonical Gauss-code text.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Representative of this diagram's class under crossing relabeling and
    /// rotation, with component order kept fixed.
    ///
    /// Crossings are renamed 1, 2, ... by first occurrence. Rotations are
    /// chosen component by component to minimise the relabeled sequence,
    /// keeping every tied labeling alive until later components break the
    /// tie. The returned key is the serialization of the minimal relabeled
    /// sequences, so two diagrams share a key iff they differ only by
    /// relabeling and rotation.
    pub fn canonical_key(&self) -> String {
        self.canonical_parts().0
    }

    /// The diagram obtained from [`canonical_key`](Self::canonical_key).
    pub fn canonical_form(&self) -> LinkDiagram {
        let comps = self.canonical_parts().1;
        LinkDiagram::new(comps).expect("relabeling preserves validity")
    }

    pub(crate) fn canonical_parts(&self) -> (String, Vec<Vec<Pass>>) {
        // Each candidate is a partial relabeling: old id -> new id.
        let mut candidates: Vec<HashMap<u32, u32>> = vec![HashMap::new()];
        let mut out: Vec<Vec<Pass>> = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            if comp.is_empty() {
                out.push(Vec::new());
                continue;
            }
            let n = comp.len();
            let mut best: Option<Vec<Pass>> = None;
            let mut next_candidates: Vec<HashMap<u32, u32>> = Vec::new();
            for labels in &candidates {
                for start in 0..n {
                    let mut map = labels.clone();
                    let mut seq = Vec::with_capacity(n);
                    for i in 0..n {
                        let p = comp[(start + i) % n];
                        let fresh = map.len() as u32 + 1;
                        let id = *map.entry(p.crossing).or_insert(fresh);
                        seq.push(Pass::new(id, p.role, p.sign));
                    }
                    match best.as_ref().map(|b| seq.cmp(b)) {
                        None | Some(std::cmp::Ordering::Less) => {
                            best = Some(seq);
                            next_candidates.clear();
                            next_candidates.push(map);
                        }
                        Some(std::cmp::Ordering::Equal) => {
                            if !next_candidates.contains(&map) {
                                next_candidates.push(map);
                            }
                        }
                        Some(std::cmp::Ordering::Greater) => {}
                    }
                }
            }
            candidates = next_candidates;
            out.push(best.expect("non-empty component"));
        }
        (write_components(&out), out)
    }
}

fn write_components(components: &[Vec<Pass>]) -> String {
    let mut s = String::new();
    for (i, comp) in components.iter().enumerate() {
        if i > 0 {
            s.push('/');
        }
        if comp.is_empty() {
            s.push('@');
        }
        for (j, pass) in comp.iter().enumerate() {
            if j > 0 {
                s.push(',');
            }
            s.push_str(&pass.to_string());
        }
    }
    s
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_components(&self.components))
    }
}

impl FromStr for LinkDiagram {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LinkDiagram::parse(s)
    }
}

/// Parses the text grammar without validating crossing invariants.
///
/// ```text
/// diagram   := component ("/" component)*
/// component := "@" | pass ("," pass)*
/// pass      := ("O"|"U") [1-9][0-9]* ("+"|"-")
/// ```
///
/// The empty string is read as a single crossingless loop.
pub fn parse_components(text: &str) -> Result<Vec<Vec<Pass>>, ParseError> {
    if text.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let err = |pos: usize, message: &str| ParseError::Syntax {
        column: pos + 1,
        message: message.to_string(),
    };
    let mut components = Vec::new();
    loop {
        let mut comp = Vec::new();
        if bytes.get(pos) == Some(&b'@') {
            pos += 1;
        } else {
            loop {
                let role = match bytes.get(pos) {
                    Some(b'O') => Role::Over,
                    Some(b'U') => Role::Under,
                    _ => return Err(err(pos, "expected 'O', 'U' or '@'")),
                };
                pos += 1;
                let start = pos;
                match bytes.get(pos) {
                    Some(b'1'..=b'9') => pos += 1,
                    _ => return Err(err(pos, "expected a crossing id starting with 1-9")),
                }
                while matches!(bytes.get(pos), Some(b'0'..=b'9')) {
                    pos += 1;
                }
                let crossing: u32 = text[start..pos]
                    .parse()
                    .map_err(|_| err(start, "crossing id out of range"))?;
                let sign = match bytes.get(pos) {
                    Some(b'+') => Sign::Positive,
                    Some(b'-') => Sign::Negative,
                    _ => return Err(err(pos, "expected '+' or '-'")),
                };
                pos += 1;
                comp.push(Pass::new(crossing, role, sign));
                if bytes.get(pos) == Some(&b',') {
                    pos += 1;
                } else {
                    break;
                }
            }
        }
        components.push(comp);
        match bytes.get(pos) {
            None => break,
            Some(b'/') => pos += 1,
            Some(_) => return Err(err(pos, "expected ',' or '/'")),
        }
    }
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pseudo_hopf() {
        let d = LinkDiagram::parse("O1+/U1+").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.components()[0], vec![Pass::over(1, Sign::Positive)]);
        assert_eq!(d.to_string(), "O1+/U1+");
    }

    #[test]
    fn loops() {
        let d = LinkDiagram::parse("@").unwrap();
        assert_eq!(d, LinkDiagram::unknot());
        assert_eq!(LinkDiagram::parse("").unwrap(), d);
        assert_eq!(d.to_string(), "@");
        assert_eq!(LinkDiagram::parse("@/@").unwrap().component_count(), 2);
    }

    #[test]
    fn rotation_is_canonicalised() {
        let kink = LinkDiagram::parse("U1+,O1+").unwrap();
        assert_eq!(kink.to_string(), "O1+,U1+");
        let d = LinkDiagram::parse("U2-,O1+,U1+,O2-").unwrap();
        assert_eq!(d.to_string(), "O1+,U1+,O2-,U2-");
    }

    #[test]
    fn validation_errors() {
        let v = |s: &str| LinkDiagram::parse(s).unwrap_err();
        assert_eq!(
            v("O1+,O1+"),
            ParseError::Invalid(Violation::DuplicateRole { crossing: 1, role: Role::Over })
        );
        assert_eq!(v("O1+,U1-"), ParseError::Invalid(Violation::SignMismatch { crossing: 1 }));
        assert_eq!(
            v("O1+"),
            ParseError::Invalid(Violation::OddOccurrence { crossing: 1, count: 1 })
        );
        assert_eq!(
            v("O1+,U1+/O1+"),
            ParseError::Invalid(Violation::OddOccurrence { crossing: 1, count: 3 })
        );
        assert!(validate(&[]).is_err());
        assert_eq!(
            validate(&[vec![Pass::over(0, Sign::Positive), Pass::under(0, Sign::Positive)]]),
            Err(Violation::ZeroId)
        );
    }

    #[test]
    fn first_violation_wins() {
        // crossing 2 appears first and is broken; crossing 1 is broken too
        let err = LinkDiagram::parse("O2+,O2+,O1+").unwrap_err();
        assert_eq!(
            err,
            ParseError::Invalid(Violation::DuplicateRole { crossing: 2, role: Role::Over })
        );
    }

    #[test]
    fn syntax_errors_report_columns() {
        let col = |s: &str| match parse_components(s) {
            Err(ParseError::Syntax { column, .. }) => column,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(col("O1#"), 3);
        assert_eq!(col("X1+"), 1);
        assert_eq!(col("O0+"), 2);
        assert_eq!(col("O1+,"), 5);
        assert_eq!(col("O1+/"), 5);
        assert_eq!(col("O1+ "), 4);
        assert_eq!(col("@@"), 2);
        assert_eq!(col("O99999999999+"), 2);
    }

    #[test]
    fn canonical_key_ignores_labels_and_rotation() {
        let a = LinkDiagram::parse("O7+,O3+,U7+,U3+").unwrap();
        let b = LinkDiagram::parse("U2+,U1+,O2+,O1+").unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_eq!(a.canonical_key(), "O1+,O2+,U1+,U2+");
        let c = LinkDiagram::parse("O1+,O2+,U2+,U1+").unwrap();
        assert_ne!(a.canonical_key(), c.canonical_key());
    }

    #[test]
    fn canonical_key_keeps_component_order() {
        let a = LinkDiagram::parse("O1+/U1+").unwrap();
        let b = LinkDiagram::parse("U1+/O1+").unwrap();
        assert_ne!(a.canonical_key(), b.canonical_key());
        assert_eq!(b.canonical_form().to_string(), "U1+/O1+");
    }

    #[test]
    fn crossing_table() {
        let d = LinkDiagram::parse("O1+,U2+/U1+,O2+").unwrap();
        let cs = d.crossings();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0], Crossing { id: 1, sign: Sign::Positive, over: (0, 0), under: (1, 1) });
        assert_eq!(cs[1].over, (1, 0));
    }
}
