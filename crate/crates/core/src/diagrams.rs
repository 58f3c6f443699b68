//! Counting π-decorated theta graphs directly.
//!
//! A decoration assigns a group element to each of the three edges, all
//! oriented from vertex 1 to vertex 2. Two decorations are identified when
//! they differ by
//!
//! * a permutation of the edges,
//! * holonomy at vertex 1 (left multiplication of every label by g) or at
//!   vertex 2 (right multiplication by h⁻¹),
//! * reversing all edges, which inverts every label.
//!
//! The number of classes is dim 𝒜_Θ^odd(ℂπ). Each class is represented by
//! its lexicographically smallest label triple.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_DIAGRAM_MAX_ORDER: usize = 120;

/// Canonical representatives of all decoration classes, sorted.
pub fn diagram_classes(g: &FiniteGroup, max_order: usize) -> Result<Vec<[usize; 3]>> {
    let n = g.order();
    if n > max_order {
        return Err(Error::resource(
            "diagram group order",
            n as u64,
            max_order as u64,
        ));
    }
    let idx = |t: [usize; 3]| (t[0] * n + t[1]) * n + t[2];
    let mut seen = vec![false; n * n * n];
    let gens: Vec<(usize, usize)> = g.generators().iter().map(|&s| (s, g.inv(s))).collect();
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    // visiting in lexicographic order makes the first triple of each class
    // its minimum
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let t = [a, b, c];
                if seen[idx(t)] {
                    continue;
                }
                reps.push(t);
                seen[idx(t)] = true;
                stack.push(t);
                while let Some([x, y, z]) = stack.pop() {
                    let mut next = vec![[y, x, z], [x, z, y], [g.inv(x), g.inv(y), g.inv(z)]];
                    for &(s, s_inv) in &gens {
                        next.push([g.mul(s, x), g.mul(s, y), g.mul(s, z)]);
                        next.push([g.mul(x, s_inv), g.mul(y, s_inv), g.mul(z, s_inv)]);
                    }
                    for u in next {
                        if !seen[idx(u)] {
                            seen[idx(u)] = true;
                            stack.push(u);
                        }
                    }
                }
            }
        }
    }
    Ok(reps)
}

pub fn count_diagrams(g: &FiniteGroup, max_order: usize) -> Result<u64> {
    diagram_classes(g, max_order).map(|r| r.len() as u64)
}
