//! Brute-force routes: Burnside averaging over π×π (plain part) and over the
//! twisted coset (x ↦ h x⁻¹ g⁻¹), and explicit orbit enumeration on the
//! monomial basis of Sym³ℂπ.
//!
//! For a permutation σ of a basis, the trace of σ on Sym³ is
//! (t₁³ + 3t₁t₂ + 2t₃)/6 with t_k the number of fixed points of σ^k. On Ker ε
//! every t_k drops by one.

use num::{BigInt, BigRational};
use rayon::prelude::*;

use crate::conjugacy::ClassData;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub const DEFAULT_BURNSIDE_MAX_ORDER: usize = 2000;
pub const DEFAULT_ORBIT_MAX_ORDER: usize = 150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BurnsideMode {
    /// Iterate all pairs (g, h) and count fixed points of explicit
    /// permutations and their powers.
    Naive,
    /// Sum over class pairs for the plain part and over classes of w = hg
    /// for the twisted part.
    ClassReduced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideDims {
    pub d1: BigRational,
    pub d2: BigRational,
    pub d1_ker: BigRational,
    pub d2_ker: BigRational,
}

impl BurnsideDims {
    pub fn dim(&self) -> BigRational {
        (&self.d1 + &self.d2) / BigInt::from(2)
    }

    pub fn dim_ker(&self) -> BigRational {
        (&self.d1_ker + &self.d2_ker) / BigInt::from(2)
    }
}

/// 6 × trace on Sym³, for ℂπ and for Ker ε.
#[inline]
fn sym3(t1: i128, t2: i128, t3: i128) -> (i128, i128) {
    let full = t1 * t1 * t1 + 3 * t1 * t2 + 2 * t3;
    let (k1, k2, k3) = (t1 - 1, t2 - 1, t3 - 1);
    (full, k1 * k1 * k1 + 3 * k1 * k2 + 2 * k3)
}

#[derive(Default, Clone, Copy)]
struct Sums {
    plain: i128,
    plain_ker: i128,
    twisted: i128,
    twisted_ker: i128,
}

impl std::ops::Add for Sums {
    type Output = Sums;
    fn add(self, o: Sums) -> Sums {
        Sums {
            plain: self.plain + o.plain,
            plain_ker: self.plain_ker + o.plain_ker,
            twisted: self.twisted + o.twisted,
            twisted_ker: self.twisted_ker + o.twisted_ker,
        }
    }
}

fn fixed_point_counts(sigma: &[usize]) -> (i128, i128, i128) {
    let (mut t1, mut t2, mut t3) = (0, 0, 0);
    for x in 0..sigma.len() {
        let y = sigma[x];
        if y == x {
            t1 += 1;
        }
        let z = sigma[y];
        if z == x {
            t2 += 1;
        }
        if sigma[z] == x {
            t3 += 1;
        }
    }
    (t1, t2, t3)
}

fn naive_sums(g: &FiniteGroup) -> Sums {
    let n = g.order();
    (0..n)
        .into_par_iter()
        .map(|a| {
            let a_inv = g.inv(a);
            let mut sigma = vec![0usize; n];
            let mut acc = Sums::default();
            for b in 0..n {
                let b_inv = g.inv(b);
                // plain: x ↦ a x b⁻¹
                for (x, s) in sigma.iter_mut().enumerate() {
                    *s = g.mul(g.mul(a, x), b_inv);
                }
                let (t1, t2, t3) = fixed_point_counts(&sigma);
                let (f, k) = sym3(t1, t2, t3);
                acc.plain += f;
                acc.plain_ker += k;
                // twisted: x ↦ b x⁻¹ a⁻¹
                for (x, s) in sigma.iter_mut().enumerate() {
                    *s = g.mul(g.mul(b, g.inv(x)), a_inv);
                }
                let (t1, t2, t3) = fixed_point_counts(&sigma);
                let (f, k) = sym3(t1, t2, t3);
                acc.twisted += f;
                acc.twisted_ker += k;
            }
            acc
        })
        .reduce(Sums::default, |a, b| a + b)
}

fn reduced_sums(g: &FiniteGroup, c: &ClassData) -> Sums {
    let k = c.num_classes();
    let n = g.order() as i128;
    let cent = |i: usize| c.centralizer_size(i) as i128;
    let mut acc = Sums::default();
    for i in 0..k {
        for j in 0..k {
            let t1 = if i == j { cent(i) } else { 0 };
            let t2 = if c.square[i] == c.square[j] {
                cent(c.square[i])
            } else {
                0
            };
            let t3 = if c.cube[i] == c.cube[j] {
                cent(c.cube[i])
            } else {
                0
            };
            let w = (c.sizes[i] * c.sizes[j]) as i128;
            let (f, kk) = sym3(t1, t2, t3);
            acc.plain += w * f;
            acc.plain_ker += w * kk;
        }
    }
    // twisted(g,h): t₁ = r(w), t₂ = |C(w)|, t₃ = r(w³) with w = hg; each w
    // arises from |π| pairs
    let r = c.sqrt_counts(g);
    for i in 0..k {
        let (f, kk) = sym3(r[i] as i128, cent(i), r[c.cube[i]] as i128);
        let w = c.sizes[i] as i128 * n;
        acc.twisted += w * f;
        acc.twisted_ker += w * kk;
    }
    acc
}

/// d₁, d₂ and their Ker ε versions by Burnside's lemma.
pub fn burnside_dims(
    g: &FiniteGroup,
    classes: &ClassData,
    mode: BurnsideMode,
    max_order: usize,
) -> Result<BurnsideDims> {
    if g.order() > max_order {
        return Err(Error::resource(
            "burnside group order",
            g.order() as u64,
            max_order as u64,
        ));
    }
    let sums = match mode {
        BurnsideMode::Naive => naive_sums(g),
        BurnsideMode::ClassReduced => reduced_sums(g, classes),
    };
    let n = BigInt::from(g.order());
    let den = BigInt::from(6) * &n * &n;
    let q = |v: i128| BigRational::new(BigInt::from(v), den.clone());
    Ok(BurnsideDims {
        d1: q(sums.plain),
        d2: q(sums.twisted),
        d1_ker: q(sums.plain_ker),
        d2_ker: q(sums.twisted_ker),
    })
}

/// Number of orbits of (π×π)⋊ℤ₂ on degree-3 monomials in the basis π, i.e.
/// dim 𝒜(ℂπ), by explicit enumeration. With `twisted = false` only π×π
/// acts and the result is d₁.
pub fn orbit_count(g: &FiniteGroup, twisted: bool, max_order: usize) -> Result<u64> {
    let n = g.order();
    if n > max_order {
        return Err(Error::resource(
            "orbit group order",
            n as u64,
            max_order as u64,
        ));
    }
    let key = |mut t: [usize; 3]| {
        t.sort_unstable();
        (t[0] * n + t[1]) * n + t[2]
    };
    let mut moves: Vec<Vec<usize>> = Vec::new();
    for &s in g.generators() {
        moves.push((0..n).map(|x| g.mul(s, x)).collect());
        let s_inv = g.inv(s);
        moves.push((0..n).map(|x| g.mul(x, s_inv)).collect());
    }
    if twisted {
        moves.push((0..n).map(|x| g.inv(x)).collect());
    }
    let mut seen = vec![false; n * n * n];
    let mut stack = Vec::new();
    let mut orbits = 0u64;
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let start = key([a, b, c]);
                if seen[start] {
                    continue;
                }
                orbits += 1;
                seen[start] = true;
                stack.push([a, b, c]);
                while let Some(t) = stack.pop() {
                    for m in &moves {
                        let u = [m[t[0]], m[t[1]], m[t[2]]];
                        let ku = key(u);
                        if !seen[ku] {
                            seen[ku] = true;
                            stack.push(u);
                        }
                    }
                }
            }
        }
    }
    Ok(orbits)
}

/// dim 𝒜(ℂπ) by orbit enumeration.
pub fn orbit_count_dims(g: &FiniteGroup, max_order: usize) -> Result<BigInt> {
    orbit_count(g, true, max_order).map(BigInt::from)
}
