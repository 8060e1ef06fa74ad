//! Helly property for small set families.

use crate::graph::VertexSet;

/// True iff every two members of `sets` share an element.
pub fn pairwise_intersecting(sets: &[VertexSet]) -> bool {
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.intersects(*b)))
}

pub fn common_intersection(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(!VertexSet::EMPTY, |acc, &s| acc & s)
}

/// A pairwise intersecting subfamily with empty intersection, as indices
/// into `family`, or `None` when the family is Helly. Members are assumed
/// nonempty.
///
/// Uses the triple criterion: a family is Helly iff, for every three
/// elements, the members containing at least two of them have a common
/// element. A failing triple yields its members as the witness, since any two
/// of them share one of the three elements.
pub fn helly_violation(family: &[VertexSet]) -> Option<Vec<usize>> {
    let ground: Vec<usize> = family.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s).to_vec();
    for (ix, &x) in ground.iter().enumerate() {
        for (iy, &y) in ground.iter().enumerate().skip(ix + 1) {
            for &z in &ground[iy + 1..] {
                let triple: VertexSet = [x, y, z].into_iter().collect();
                let members: Vec<usize> = (0..family.len()).filter(|&i| (family[i] & triple).len() >= 2).collect();
                let sets: Vec<VertexSet> = members.iter().map(|&i| family[i]).collect();
                if !members.is_empty() && common_intersection(&sets).is_empty() {
                    return Some(members);
                }
            }
        }
    }
    None
}

pub fn is_helly(family: &[VertexSet]) -> bool {
    helly_violation(family).is_none()
}
