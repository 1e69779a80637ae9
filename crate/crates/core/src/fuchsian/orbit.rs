//! Orbit enumeration by breadth-first search over words in `S`, `T`, `T^{-1}`.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::hyperbolic::UpperHalfPoint;

use super::moebius::MoebiusElement;

/// Groups whose orbits can be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    /// `PSL(2, Z)`.
    Modular,
    /// Principal congruence subgroup `Gamma(N)`, i.e. elements `+-I mod N`.
    Congruence(u32),
}

impl GroupKind {
    pub fn contains(&self, g: &MoebiusElement) -> bool {
        match self {
            Self::Modular => true,
            Self::Congruence(n) => g.is_congruent_to_identity(*n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitPoint {
    pub point: UpperHalfPoint,
    pub element: MoebiusElement,
    /// Shortest word found, e.g. `"T*S"` (rightmost factor acts first); `"I"` for the identity.
    pub word: String,
}

/// Distinct points within this distance are merged.
pub const POINT_TOLERANCE: f64 = 1e-12;

/// `{g seed}` for all `g` of word length at most `max_word_length` that lie in `group`,
/// deduplicated first by matrix and then by point. Output is in breadth-first order.
pub fn orbit(group: GroupKind, seed: UpperHalfPoint, max_word_length: usize) -> Vec<OrbitPoint> {
    let gens = [
        (MoebiusElement::s(), "S"),
        (MoebiusElement::t(), "T"),
        (MoebiusElement::t_inv(), "Ti"),
    ];
    let mut seen: HashSet<MoebiusElement> = HashSet::new();
    let mut queue: VecDeque<(MoebiusElement, String, usize)> = VecDeque::new();
    let id = MoebiusElement::identity();
    seen.insert(id);
    queue.push_back((id, String::from("I"), 0));
    let mut elements = Vec::new();
    while let Some((g, word, len)) = queue.pop_front() {
        if group.contains(&g) {
            elements.push((g, word.clone()));
        }
        if len == max_word_length {
            continue;
        }
        for (h, name) in &gens {
            let next = *h * g;
            if seen.insert(next) {
                let w = if len == 0 { name.to_string() } else { format!("{name}*{word}") };
                queue.push_back((next, w, len + 1));
            }
        }
    }
    let mut cells: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    let mut out: Vec<OrbitPoint> = Vec::new();
    for (g, word) in elements {
        let point = g.apply(seed);
        let key = cell(point);
        let dup = (-1..=1).any(|dx| {
            (-1..=1).any(|dy| {
                cells.get(&(key.0 + dx, key.1 + dy)).is_some_and(|ids| {
                    ids.iter().any(|&i| {
                        let q = out[i].point;
                        (q.x - point.x).hypot(q.y - point.y) <= POINT_TOLERANCE
                    })
                })
            })
        });
        if !dup {
            cells.entry(key).or_default().push(out.len());
            out.push(OrbitPoint { point, element: g, word });
        }
    }
    out
}

fn cell(p: UpperHalfPoint) -> (i64, i64) {
    ((p.x / POINT_TOLERANCE).floor() as i64, (p.y / POINT_TOLERANCE).floor() as i64)
}
