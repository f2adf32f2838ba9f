//! Random diagrams for property tests and demos.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{LinkDiagram, Pass, Role, Sign};
use crate::moves::{apply_move, enumerate_moves, Move, MoveKind};

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Any Gauss code is a virtual diagram: scatter the 2c passes of `crossings`
/// crossings over `components` cyclic sequences.
pub fn random_diagram<R: Rng>(rng: &mut R, crossings: usize, components: usize) -> LinkDiagram {
    assert!(components >= 1);
    let mut passes = Vec::with_capacity(2 * crossings);
    for id in 1..=crossings as u32 {
        let sign = random_sign(rng);
        passes.push(Pass::new(id, Role::Over, sign));
        passes.push(Pass::new(id, Role::Under, sign));
    }
    passes.shuffle(rng);
    let mut comps = vec![Vec::new(); components];
    for p in passes {
        comps[rng.gen_range(0..components)].push(p);
    }
    LinkDiagram::new(comps).expect("every pass paired")
}

/// Up to `max_crossings` crossings and up to `max_components` components.
pub fn random_small_diagram<R: Rng>(rng: &mut R, max_crossings: usize, max_components: usize) -> LinkDiagram {
    let c = rng.gen_range(0..=max_crossings);
    let n = rng.gen_range(1..=max_components);
    random_diagram(rng, c, n)
}

/// A braid letter: `generator` i joins strands i and i+1 (0-based);
/// `positive` means the strand at i crosses over to i+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub positive: bool,
}

/// Gauss code of the planar closure of a braid on `strands` strands.
/// Components are ordered by their lowest starting position.
pub fn braid_closure(strands: usize, word: &[Letter]) -> LinkDiagram {
    assert!(strands >= 1);
    // at[p] = strand currently at position p
    let mut at: Vec<usize> = (0..strands).collect();
    let mut paths: Vec<Vec<Pass>> = vec![Vec::new(); strands];
    for (k, l) in word.iter().enumerate() {
        assert!(l.generator + 1 < strands, "generator out of range");
        let id = k as u32 + 1;
        let (left, right) = (at[l.generator], at[l.generator + 1]);
        let (sign, left_role) = if l.positive {
            (Sign::Positive, Role::Over)
        } else {
            (Sign::Negative, Role::Under)
        };
        paths[left].push(Pass::new(id, left_role, sign));
        paths[right].push(Pass::new(id, left_role.flip(), sign));
        at.swap(l.generator, l.generator + 1);
    }
    // strand s ends at position end[s] and continues as the strand starting there
    let mut end = vec![0; strands];
    for (p, &s) in at.iter().enumerate() {
        end[s] = p;
    }
    let mut done = vec![false; strands];
    let mut comps = Vec::new();
    for s0 in 0..strands {
        if done[s0] {
            continue;
        }
        let mut comp = Vec::new();
        let mut s = s0;
        while !done[s] {
            done[s] = true;
            comp.extend(paths[s].iter().copied());
            s = end[s];
        }
        comps.push(comp);
    }
    LinkDiagram::new(comps).expect("braid closures are valid")
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, length: usize) -> Vec<Letter> {
    assert!(strands >= 2);
    (0..length)
        .map(|_| Letter { generator: rng.gen_range(0..strands - 1), positive: rng.gen() })
        .collect()
}

/// A random classical diagram: the closure of a random braid.
pub fn random_classical<R: Rng>(rng: &mut R, max_strands: usize, max_length: usize) -> LinkDiagram {
    let strands = rng.gen_range(2..=max_strands.max(2));
    let length = rng.gen_range(0..=max_length);
    braid_closure(strands, &random_braid(rng, strands, length))
}

/// Applies up to `steps` random enumerated moves, never exceeding
/// `max_crossings`. Returns the moves taken and the final diagram.
pub fn random_walk<R: Rng>(
    rng: &mut R,
    start: &LinkDiagram,
    steps: usize,
    max_crossings: usize,
) -> (Vec<Move>, LinkDiagram) {
    let mut cur = start.clone();
    let mut taken = Vec::new();
    for _ in 0..steps {
        // a random kind first, then a random move of that kind
        let mut kinds = MoveKind::ALL.to_vec();
        kinds.shuffle(rng);
        let choice = kinds.into_iter().find_map(|k| {
            let moves: Vec<Move> = enumerate_moves(&cur, &[k])
                .into_iter()
                .filter(|m| (cur.crossing_count() as i64 + m.crossing_delta()) as usize <= max_crossings)
                .collect();
            moves.choose(rng).copied()
        });
        let Some(m) = choice else { break };
        cur = apply_move(&cur, &m).expect("enumerated moves apply");
        taken.push(m);
    }
    (taken, cur)
}
