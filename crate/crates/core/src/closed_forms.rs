//! Closed-form dimensions for the fundamental groups of spherical
//! 3-manifolds, i.e. the groups Z_m × G with G one of Z_n, D*_{4p},
//! D'_{2^{k+2}p}, T*, T'_{8·3^k}, O*, I* under the usual coprimality
//! conditions.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::group::Family;

/// A spherical group in normal form. `m` is the order of the cyclic factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SphericalSpec {
    /// Z_n
    Cyclic { n: u64 },
    /// Z_m × D*_{4p}, (m, 2p) = 1
    BinaryDihedral { m: u64, p: u64 },
    /// Z_m × D'_{2^{k+2}p}, p ≥ 3 odd, (m, 2p) = 1
    DPrime { m: u64, k: u32, p: u64 },
    /// Z_m × T*, (m, 6) = 1
    TStar { m: u64 },
    /// Z_m × T'_{8·3^k}, k ≥ 2, (m, 6) = 1
    TPrime { m: u64, k: u32 },
    /// Z_m × O*, (m, 6) = 1
    OStar { m: u64 },
    /// Z_m × I*, (m, 30) = 1
    IStar { m: u64 },
}

impl SphericalSpec {
    /// Letter of the classification case, `a` to `g`.
    pub fn case(&self) -> char {
        match self {
            SphericalSpec::Cyclic { .. } => 'a',
            SphericalSpec::BinaryDihedral { .. } => 'b',
            SphericalSpec::DPrime { .. } => 'c',
            SphericalSpec::TStar { .. } => 'd',
            SphericalSpec::TPrime { .. } => 'e',
            SphericalSpec::OStar { .. } => 'f',
            SphericalSpec::IStar { .. } => 'g',
        }
    }

    /// Group order (saturating).
    pub fn order(&self) -> u64 {
        let (m, g) = match *self {
            SphericalSpec::Cyclic { n } => (1, Family::Cyclic { n }),
            SphericalSpec::BinaryDihedral { m, p } => (m, Family::BinaryDihedral { p }),
            SphericalSpec::DPrime { m, k, p } => (m, Family::DPrime { k, p }),
            SphericalSpec::TStar { m } => (m, Family::TStar),
            SphericalSpec::TPrime { m, k } => (m, Family::TPrime { k }),
            SphericalSpec::OStar { m } => (m, Family::OStar),
            SphericalSpec::IStar { m } => (m, Family::IStar),
        };
        m.saturating_mul(g.order())
    }
}

impl fmt::Display for SphericalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SphericalSpec::Cyclic { n } => write!(f, "Z({n})"),
            SphericalSpec::BinaryDihedral { m, p } => write!(f, "Z({m}) x Dstar({p})"),
            SphericalSpec::DPrime { m, k, p } => write!(f, "Z({m}) x Dprime({k},{p})"),
            SphericalSpec::TStar { m } => write!(f, "Z({m}) x Tstar"),
            SphericalSpec::TPrime { m, k } => write!(f, "Z({m}) x Tprime({k})"),
            SphericalSpec::OStar { m } => write!(f, "Z({m}) x Ostar"),
            SphericalSpec::IStar { m } => write!(f, "Z({m}) x Istar"),
        }
    }
}

/// Outcome of [`validate_spherical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalCheck {
    pub spec: Option<SphericalSpec>,
    pub diagnostics: Vec<String>,
}

impl SphericalCheck {
    pub fn is_spherical(&self) -> bool {
        self.spec.is_some()
    }
}

/// Decide whether `expr` is (isomorphic to) a spherical 3-manifold group of
/// one of the cases (a)–(g).
///
/// Cyclic factors with pairwise coprime orders are merged into a single
/// Z_m. `Tprime(1)` is T* and is reported as case (d).
pub fn validate_spherical(expr: &GroupExpr) -> SphericalCheck {
    let mut diagnostics = Vec::new();
    if let Err(e) = expr.validate() {
        diagnostics.push(e.to_string());
        return SphericalCheck {
            spec: None,
            diagnostics,
        };
    }
    let mut m: u64 = 1;
    let mut others = Vec::new();
    for f in &expr.atoms {
        match *f {
            Family::Cyclic { n } => {
                if m.gcd(&n) != 1 {
                    diagnostics.push(format!(
                        "cyclic factors are not coprime (gcd({m}, {n}) = {}), so their product is not cyclic",
                        m.gcd(&n)
                    ));
                }
                m = m.saturating_mul(n);
            }
            other => others.push(other),
        }
    }
    if others.len() > 1 {
        diagnostics.push(format!(
            "more than one non-cyclic factor ({})",
            others
                .iter()
                .map(Family::name)
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    if !diagnostics.is_empty() {
        return SphericalCheck {
            spec: None,
            diagnostics,
        };
    }
    let coprime = |n: u64, what: &str, diags: &mut Vec<String>| {
        if m.gcd(&n) != 1 {
            diags.push(format!("requires gcd(m, {what}) = 1, but m = {m}"));
        }
    };
    let spec = match others.first() {
        None => SphericalSpec::Cyclic { n: m },
        Some(&f) => match f {
            Family::BinaryDihedral { p } => {
                coprime(2 * p, "2p", &mut diagnostics);
                SphericalSpec::BinaryDihedral { m, p }
            }
            Family::DPrime { k, p } => {
                coprime(2 * p, "2p", &mut diagnostics);
                SphericalSpec::DPrime { m, k, p }
            }
            Family::TStar | Family::TPrime { k: 1 } => {
                coprime(6, "6", &mut diagnostics);
                SphericalSpec::TStar { m }
            }
            Family::TPrime { k } => {
                coprime(6, "6", &mut diagnostics);
                SphericalSpec::TPrime { m, k }
            }
            Family::OStar => {
                coprime(6, "6", &mut diagnostics);
                SphericalSpec::OStar { m }
            }
            Family::IStar => {
                coprime(30, "30", &mut diagnostics);
                SphericalSpec::IStar { m }
            }
            Family::Cyclic { .. } => unreachable!(),
        },
    };
    SphericalCheck {
        spec: diagnostics.is_empty().then_some(spec),
        diagnostics,
    }
}

/// Number of partitions of n into at most three parts; 0 for n < 0.
pub fn p3(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    // round((n+3)^2 / 12)
    let s = BigInt::from(n) + 3;
    (&s * &s + 6) / 12
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn z(v: u64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Evaluate Σ c_i · x^{e_i} style polynomials given as (coefficient, value).
fn eval(terms: &[(BigRational, BigRational)]) -> BigRational {
    terms
        .iter()
        .fold(BigRational::zero(), |acc, (c, v)| acc + c * v)
}

fn integral(v: BigRational, what: &str, spec: &SphericalSpec) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::Inconsistent(format!(
            "closed form {what} for {spec} is not an integer: {v}"
        )))
    }
}

/// (dim 𝒜(ℂπ), dim 𝒜(Ker ε)) from the closed formulas.
pub fn closed_dims(spec: &SphericalSpec) -> Result<(BigInt, BigInt)> {
    let (dim, ker) = match *spec {
        SphericalSpec::Cyclic { n } => {
            let n = i64::try_from(n)
                .map_err(|_| Error::params("Z(n)", "n fits in a signed 64-bit integer"))?;
            return Ok((p3(n), p3(n - 3)));
        }
        SphericalSpec::BinaryDihedral { m, p } => {
            let generic = p % 3 != 0 && m % 3 != 0;
            let (mm, pp) = (z(m), z(p));
            let m2p2 = &mm * &mm * &pp * &pp;
            let m2p = &mm * &mm * &pp;
            let m2 = &mm * &mm;
            let mp = &mm * &pp;
            let p2 = &pp * &pp;
            let common = |mp_coef: BigRational| {
                eval(&[
                    (q(1, 6), m2p2.clone()),
                    (q(1, 2), m2p.clone()),
                    (q(2, 3), m2.clone()),
                    (mp_coef, mp.clone()),
                    (q(1, 6), p2.clone()),
                ])
            };
            if p % 2 == 0 {
                let dim =
                    common(q(3, 2)) + &mm + &pp * q(1, 2) + if generic { q(1, 1) } else { q(4, 3) };
                let ker =
                    common(q(1, 1)) - &mm * q(1, 2) + if generic { q(-1, 2) } else { q(-1, 6) };
                (dim, ker)
            } else {
                let dim = common(q(3, 2)) + &mm * q(1, 2) + if generic { q(1, 2) } else { q(5, 6) };
                let ker =
                    common(q(1, 1)) - &mm - &pp * q(1, 2) + if generic { q(0, 1) } else { q(1, 3) };
                (dim, ker)
            }
        }
        SphericalSpec::DPrime { m, k, p } => {
            let generic = p % 3 != 0 && m % 3 != 0;
            let km = z(m) * BigRational::from_integer(BigInt::one() << k);
            let pp = z(p);
            let km2 = &km * &km;
            let head = eval(&[
                (q(1, 6), &km2 * &pp * &pp),
                (q(1, 2), &km2 * &pp),
                (q(2, 3), km2.clone()),
                (q(1, 6), &pp * &pp),
            ]);
            let dim = &head
                + &km * &pp * q(3, 2)
                + &km * q(1, 2)
                + if generic { q(1, 2) } else { q(5, 6) };
            let ker =
                &head + &km * &pp - &km - &pp * q(1, 2) + if generic { q(0, 1) } else { q(1, 3) };
            (dim, ker)
        }
        SphericalSpec::TStar { m } => {
            let mm = z(m);
            let m2 = &mm * &mm;
            (
                &m2 * q(19, 3) + &mm * q(6, 1) + q(8, 3),
                &m2 * q(19, 3) + &mm * q(5, 2) + q(7, 6),
            )
        }
        SphericalSpec::TPrime { m, k } => {
            if k < 2 {
                return closed_dims(&SphericalSpec::TStar { m });
            }
            let mm = z(m);
            let m2 = &mm * &mm;
            let lead = BigRational::from_integer(BigInt::from(19) * BigInt::from(3).pow(2 * k - 3));
            let three_k = BigRational::from_integer(BigInt::from(3).pow(k));
            (
                &lead * &m2 + &three_k * &mm * q(2, 1) + q(3, 1),
                &lead * &m2 + &three_k * &mm * q(5, 6) + q(3, 2),
            )
        }
        SphericalSpec::OStar { m } => {
            let mm = z(m);
            let m2 = &mm * &mm;
            (
                &m2 * q(34, 3) + &mm * q(12, 1) + q(35, 3),
                &m2 * q(34, 3) + &mm * q(8, 1) + q(23, 3),
            )
        }
        SphericalSpec::IStar { m } => {
            let mm = z(m);
            let m2 = &mm * &mm;
            (
                &m2 * q(74, 3) + &mm * q(19, 1) + q(64, 3),
                &m2 * q(74, 3) + &mm * q(29, 2) + q(101, 6),
            )
        }
    };
    Ok((integral(dim, "dim", spec)?, integral(ker, "ker", spec)?))
}

/// dim 𝒜(ℂπ) − dim 𝒜(Ker ε), the number of inversion orbits on classes.
pub fn closed_z2_orbit_count(spec: &SphericalSpec) -> Result<BigInt> {
    let v = match *spec {
        SphericalSpec::Cyclic { n } => return Ok(BigInt::from(1 + n / 2)),
        SphericalSpec::BinaryDihedral { m, p } => {
            let (mm, pp) = (z(m), z(p));
            let c = if p % 2 == 0 { q(3, 2) } else { q(1, 2) };
            &mm * &pp * q(1, 2) + &mm * q(3, 2) + &pp * q(1, 2) + c
        }
        SphericalSpec::DPrime { m, k, p } => {
            let km = z(m) * BigRational::from_integer(BigInt::one() << k);
            let pp = z(p);
            &km * &pp * q(1, 2) + &km * q(3, 2) + &pp * q(1, 2) + q(1, 2)
        }
        SphericalSpec::TStar { m } => z(m) * q(7, 2) + q(3, 2),
        SphericalSpec::TPrime { m, k } => {
            if k < 2 {
                return closed_z2_orbit_count(&SphericalSpec::TStar { m });
            }
            let three_k = BigRational::from_integer(BigInt::from(3).pow(k));
            three_k * z(m) * q(7, 6) + q(3, 2)
        }
        SphericalSpec::OStar { m } => z(m) * q(4, 1) + q(4, 1),
        SphericalSpec::IStar { m } => z(m) * q(9, 2) + q(9, 2),
    };
    integral(v, "z2 orbit count", spec)
}
