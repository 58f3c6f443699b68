//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! A [`CycloNumber`] of conductor N is stored in the power basis
//! 1, ζ_N, …, ζ_N^{φ(N)−1}, i.e. as a polynomial reduced modulo the
//! cyclotomic polynomial Φ_N. Only nonzero coefficients are kept, sorted by
//! exponent, which makes the representation canonical for a fixed N.
//! Binary operations lift both operands to the lcm of the conductors.
//!
//! Φ_N and the reductions of ζ_N^e for 0 ≤ e < N are cached per N.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use num_integer::Integer;

struct Field {
    n: u32,
    phi: usize,
    /// Φ_N, lowest degree first, monic of degree φ(N).
    poly: Vec<i64>,
    /// ζ^e reduced, for e in 0..N.
    monomials: Vec<Vec<(u32, i64)>>,
    /// Inverse of `monomials`.
    monomial_index: HashMap<Vec<(u32, i64)>, u32>,
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field(n: u32) -> Arc<Field> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(f) = cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(build_field(n));
    cache().write().unwrap().entry(n).or_insert(f).clone()
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

fn substitute_power(poly: &[i64], k: usize) -> Vec<i64> {
    let mut out = vec![0; (poly.len() - 1) * k + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

/// Exact division by a monic polynomial.
fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut q = vec![0i64; num.len() - dn];
    for i in (0..q.len()).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(d).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    q
}

/// Φ_N via Φ_{mp}(x) = Φ_m(x^p)/Φ_m(x) over the radical, then
/// Φ_N(x) = Φ_rad(x^{N/rad}).
fn cyclotomic_poly(n: u32) -> Vec<i64> {
    let primes = prime_factors(n as u64);
    let mut poly = vec![-1, 1];
    for &p in &primes {
        poly = div_monic(&substitute_power(&poly, p as usize), &poly);
    }
    let rad: u64 = primes.iter().product();
    substitute_power(&poly, (n as u64 / rad) as usize)
}

fn build_field(n: u32) -> Field {
    let poly = cyclotomic_poly(n);
    let phi = poly.len() - 1;
    debug_assert_eq!(phi as u64, euler_phi(n as u64));
    let mut monomials: Vec<Vec<(u32, i64)>> = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    for e in 0..n as usize {
        if e < phi {
            cur = vec![0; phi];
            cur[e] = 1;
        } else {
            // multiply previous by x, then eliminate x^phi
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] = cur[i]
                        .checked_sub(top.checked_mul(poly[i]).expect("overflow"))
                        .expect("overflow");
                }
            }
        }
        monomials.push(
            cur.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i as u32, c))
                .collect(),
        );
    }
    let monomial_index = monomials
        .iter()
        .enumerate()
        .map(|(e, m)| (m.clone(), e as u32))
        .collect();
    Field {
        n,
        phi,
        poly,
        monomials,
        monomial_index,
    }
}

/// The cyclotomic polynomial Φ_N, lowest-degree coefficient first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    field(n).poly.clone()
}

/// An element of ℚ(ζ_N).
#[derive(Clone)]
pub struct CycloNumber {
    conductor: u32,
    terms: Vec<(u32, BigRational)>,
}

/// Accumulates rational multiples of powers ζ^e (e taken mod N) and reduces.
struct Acc {
    field: Arc<Field>,
    coeffs: BTreeMap<u32, BigRational>,
}

impl Acc {
    fn new(n: u32) -> Acc {
        Acc {
            field: field(n),
            coeffs: BTreeMap::new(),
        }
    }

    fn add_power(&mut self, e: u64, c: &BigRational) {
        let e = (e % self.field.n as u64) as usize;
        for &(i, m) in &self.field.monomials[e] {
            let v = self.coeffs.entry(i).or_insert_with(BigRational::zero);
            *v += c * BigRational::from_integer(m.into());
        }
    }

    fn finish(self) -> CycloNumber {
        CycloNumber {
            conductor: self.field.n,
            terms: self
                .coeffs
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

impl CycloNumber {
    pub fn zero() -> CycloNumber {
        CycloNumber {
            conductor: 1,
            terms: Vec::new(),
        }
    }

    pub fn one() -> CycloNumber {
        CycloNumber::from_rational(BigRational::one())
    }

    pub fn from_int(v: i64) -> CycloNumber {
        CycloNumber::from_rational(BigRational::from_integer(v.into()))
    }

    pub fn from_rational(q: BigRational) -> CycloNumber {
        let terms = if q.is_zero() {
            Vec::new()
        } else {
            vec![(0, q)]
        };
        CycloNumber {
            conductor: 1,
            terms,
        }
    }

    /// ζ_N^k for any integer k.
    pub fn root_of_unity(n: u32, k: i64) -> CycloNumber {
        let e = k.rem_euclid(n as i64) as u64;
        let mut acc = Acc::new(n);
        acc.add_power(e, &BigRational::one());
        acc.finish()
    }

    /// Build Σ c_k ζ_N^k from (k, c_k) pairs with arbitrary integer k.
    pub fn from_powers(n: u32, powers: &[(i64, i64)]) -> CycloNumber {
        let mut acc = Acc::new(n);
        for &(k, c) in powers {
            acc.add_power(
                k.rem_euclid(n as i64) as u64,
                &BigRational::from_integer(c.into()),
            );
        }
        acc.finish()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Dense coefficients in the power basis, length φ(N).
    pub fn coeffs(&self) -> Vec<BigRational> {
        let phi = field(self.conductor).phi;
        let mut out = vec![BigRational::zero(); phi];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-express in ℚ(ζ_L); panics unless N divides L.
    pub fn lift(&self, l: u32) -> CycloNumber {
        assert!(
            l.is_multiple_of(self.conductor),
            "conductor {} does not divide {l}",
            self.conductor
        );
        if l == self.conductor {
            return self.clone();
        }
        let step = (l / self.conductor) as u64;
        let mut acc = Acc::new(l);
        for (e, c) in &self.terms {
            acc.add_power(*e as u64 * step, c);
        }
        acc.finish()
    }

    fn common(a: &CycloNumber, b: &CycloNumber) -> (CycloNumber, CycloNumber) {
        let l = a.conductor.lcm(&b.conductor);
        (a.lift(l), b.lift(l))
    }

    /// Complex conjugate (ζ ↦ ζ⁻¹).
    pub fn conj(&self) -> CycloNumber {
        let n = self.conductor as u64;
        let mut acc = Acc::new(self.conductor);
        for (e, c) in &self.terms {
            acc.add_power(n - *e as u64, c);
        }
        acc.finish()
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The value as a rational, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn scale(&self, q: &BigRational) -> CycloNumber {
        if q.is_zero() {
            return CycloNumber {
                conductor: self.conductor,
                terms: Vec::new(),
            };
        }
        CycloNumber {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    /// Floating-point value, for diagnostics and tests.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (e, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * (*e as f64) / n;
            (re + c * t.cos(), im + c * t.sin())
        })
    }

    fn integral_terms(&self) -> Option<Vec<(u32, i64)>> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if c.is_integer() {
                    c.to_integer().to_i64().map(|v| (*e, v))
                } else {
                    None
                }
            })
            .collect()
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.terms == other.terms;
        }
        let (a, b) = CycloNumber::common(self, other);
        a.terms == b.terms
    }
}

impl Eq for CycloNumber {}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::common(self, rhs);
        let mut m: BTreeMap<u32, BigRational> = a.terms.into_iter().collect();
        for (e, c) in b.terms {
            *m.entry(e).or_insert_with(BigRational::zero) += c;
        }
        CycloNumber {
            conductor: a.conductor,
            terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = CycloNumber::common(self, rhs);
        let mut acc = Acc::new(a.conductor);
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                acc.add_power(*e1 as u64 + *e2 as u64, &(c1 * c2));
            }
        }
        acc.finish()
    }
}

macro_rules! by_value {
    ($tr:ident, $f:ident) => {
        impl $tr for CycloNumber {
            type Output = CycloNumber;
            fn $f(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$f(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl std::iter::Sum for CycloNumber {
    fn sum<I: Iterator<Item = CycloNumber>>(iter: I) -> CycloNumber {
        iter.fold(CycloNumber::zero(), |a, b| &a + &b)
    }
}

/// Σ_c w_c · a_c · conj(b_c).
///
/// When every coefficient is an integer that fits in i64 the sum is formed
/// in ℤ[x]/(x^L − 1) with checked i128 arithmetic and reduced once, which is
/// exact and much faster than term-by-term field arithmetic.
pub fn weighted_inner_product(
    weights: &[u64],
    a: &[CycloNumber],
    b: &[CycloNumber],
) -> CycloNumber {
    assert_eq!(weights.len(), a.len());
    assert_eq!(weights.len(), b.len());
    let l = a.iter().chain(b).fold(1u32, |acc, x| acc.lcm(&x.conductor));
    let fast = IntegralVector::new(a, l)
        .zip(IntegralVector::new(b, l))
        .and_then(|(x, y)| x.inner_product(weights, &y));
    if let Some(v) = fast {
        return v;
    }
    weights
        .iter()
        .zip(a.iter().zip(b))
        .map(|(&w, (x, y))| (x * &y.conj()).scale(&BigRational::from_integer(w.into())))
        .sum()
}

/// A vector of cyclotomic integers written as sparse polynomials in ζ_L
/// modulo x^L − 1, for repeated inner products. Entries equal to ±ζ^e are
/// stored as a single term.
#[derive(Debug, Clone)]
pub struct IntegralVector {
    conductor: u32,
    entries: Vec<Vec<(u32, i64)>>,
}

impl IntegralVector {
    /// `None` unless every entry has small integer coefficients and a
    /// conductor dividing `conductor`.
    pub fn new(v: &[CycloNumber], conductor: u32) -> Option<IntegralVector> {
        let entries = v
            .iter()
            .map(|x| {
                if !conductor.is_multiple_of(x.conductor) {
                    return None;
                }
                let s = conductor / x.conductor;
                let terms = x.integral_terms()?;
                let f = field(x.conductor);
                let sparse = if let Some(&e) = f.monomial_index.get(&terms) {
                    vec![(e, 1)]
                } else {
                    let neg: Vec<(u32, i64)> = terms.iter().map(|&(e, c)| (e, -c)).collect();
                    match f.monomial_index.get(&neg) {
                        Some(&e) => vec![(e, -1)],
                        None => terms,
                    }
                };
                Some(sparse.into_iter().map(|(e, c)| (e * s, c)).collect())
            })
            .collect::<Option<_>>()?;
        Some(IntegralVector { conductor, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ w·a·conj(b), or `None` on i128 overflow or a conductor mismatch.
    pub fn inner_product(&self, weights: &[u64], other: &IntegralVector) -> Option<CycloNumber> {
        if self.conductor != other.conductor
            || self.len() != other.len()
            || weights.len() != self.len()
        {
            return None;
        }
        let n = self.conductor as usize;
        let mut acc = vec![0i128; n];
        for ((&w, tx), ty) in weights.iter().zip(&self.entries).zip(&other.entries) {
            let w = w as i128;
            for &(e1, c1) in tx {
                let wc = w.checked_mul(c1 as i128)?;
                for &(e2, c2) in ty {
                    let e = (e1 as usize + n - e2 as usize) % n;
                    acc[e] = acc[e].checked_add(wc.checked_mul(c2 as i128)?)?;
                }
            }
        }
        let f = field(self.conductor);
        let mut dense = vec![0i128; f.phi];
        for (e, &c) in acc.iter().enumerate() {
            if c != 0 {
                for &(i, m) in &f.monomials[e] {
                    dense[i as usize] = dense[i as usize].checked_add(c.checked_mul(m as i128)?)?;
                }
            }
        }
        Some(CycloNumber {
            conductor: self.conductor,
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (i as u32, BigRational::from_integer(BigInt::from(c))))
                .collect(),
        })
    }
}

impl fmt::Debug for CycloNumber {
    /// `q0 + q1*z(N)^1 + …`, omitting zero coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*z({})^{e}", self.conductor)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{self:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-8 && (a.1 - b.1).abs() < 1e-8
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // first polynomial with a coefficient of absolute value 2
        let p = cyclotomic_polynomial(105);
        assert_eq!(p.len() - 1, 48);
        assert_eq!(p.iter().filter(|&&c| c == -2).count(), 2);
        for n in 1..200u32 {
            assert_eq!(
                cyclotomic_polynomial(n).len() as u64 - 1,
                euler_phi(n as u64)
            );
        }
    }

    #[test]
    fn examples() {
        // ζ_4² = −1
        let z4 = CycloNumber::root_of_unity(4, 1);
        assert_eq!(&z4 * &z4, CycloNumber::from_int(-1));
        // ζ_3 + ζ_3² = −1
        let s = &CycloNumber::root_of_unity(3, 1) + &CycloNumber::root_of_unity(3, 2);
        assert_eq!(
            s.as_rational(),
            Some(BigRational::from_integer((-1).into()))
        );
        // √2 = ζ_8 + ζ_8⁻¹ squares to 2 and is real
        let r2 = CycloNumber::from_powers(8, &[(1, 1), (-1, 1)]);
        assert!(r2.is_real());
        assert_eq!(&r2 * &r2, CycloNumber::from_int(2));
        // golden ratio from ζ_5
        let phi = -CycloNumber::from_powers(5, &[(2, 1), (3, 1)]);
        assert_eq!(&(&phi * &phi) - &phi, CycloNumber::one());
        assert!(!CycloNumber::root_of_unity(3, 1).is_real());
    }

    #[test]
    fn mixed_conductors() {
        let a = CycloNumber::root_of_unity(3, 1);
        let b = CycloNumber::root_of_unity(4, 1);
        let c = &a * &b;
        assert_eq!(c.conductor(), 12);
        assert_eq!(c, CycloNumber::root_of_unity(12, 7));
        // same value at different conductors compares equal
        assert_eq!(
            CycloNumber::root_of_unity(6, 2),
            CycloNumber::root_of_unity(3, 1)
        );
        assert_eq!(CycloNumber::root_of_unity(2, 1), CycloNumber::from_int(-1));
    }

    #[test]
    fn debug_format() {
        let x = CycloNumber::from_powers(8, &[(0, 2), (1, 1), (3, -1)]);
        assert_eq!(format!("{x:?}"), "2 + 1*z(8)^1 - 1*z(8)^3");
        assert_eq!(format!("{:?}", CycloNumber::zero()), "0");
    }

    #[test]
    fn sum_of_roots_of_unity_vanishes() {
        for n in 2..40u32 {
            let s: CycloNumber = (0..n as i64)
                .map(|k| CycloNumber::root_of_unity(n, k))
                .sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn fast_inner_product_matches_slow_path() {
        let a: Vec<CycloNumber> = (0..6)
            .map(|k| CycloNumber::from_powers(12, &[(k, 2), (5 * k, -1)]))
            .collect();
        let b: Vec<CycloNumber> = (0..6)
            .map(|k| CycloNumber::from_powers(30, &[(k, 1), (7, k)]))
            .collect();
        let w = [1, 2, 3, 4, 5, 6];
        let (x, y) = (
            IntegralVector::new(&a, 60).unwrap(),
            IntegralVector::new(&b, 60).unwrap(),
        );
        let fast = x.inner_product(&w, &y).unwrap();
        let slow: CycloNumber = w
            .iter()
            .zip(a.iter().zip(&b))
            .map(|(&w, (x, y))| (x * &y.conj()).scale(&BigRational::from_integer(w.into())))
            .sum();
        assert_eq!(fast, slow);
        let half = CycloNumber::from_rational(BigRational::new(1.into(), 2.into()));
        let v = weighted_inner_product(
            &[4],
            std::slice::from_ref(&half),
            std::slice::from_ref(&half),
        );
        assert_eq!(v, CycloNumber::one());
    }

    #[test]
    fn roots_of_unity_lift_to_single_terms() {
        let a: Vec<CycloNumber> = (0..21).map(|k| CycloNumber::root_of_unity(21, k)).collect();
        let b: Vec<CycloNumber> = (0..21)
            .map(|k| -CycloNumber::root_of_unity(21, 2 * k))
            .collect();
        let x = IntegralVector::new(&a, 42).unwrap();
        assert!(x.entries.iter().all(|t| t.len() == 1));
        let y = IntegralVector::new(&b, 42).unwrap();
        assert!(y.entries.iter().all(|t| t == &[(t[0].0, -1)]));
        let w = vec![1u64; 21];
        let slow: CycloNumber = a.iter().zip(&b).map(|(p, q)| p * &q.conj()).sum();
        assert_eq!(x.inner_product(&w, &y).unwrap(), slow);
        assert!(slow.is_zero());
        assert_eq!(x.inner_product(&w, &x).unwrap(), CycloNumber::from_int(21));
        assert!(IntegralVector::new(&a, 20).is_none());
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloNumber> {
        (
            prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 20, 24]),
            prop::collection::vec((-30i64..30, -5i64..6), 0..5),
        )
            .prop_map(|(n, p)| CycloNumber::from_powers(n, &p))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn conjugation(a in arb_cyclo(), b in arb_cyclo()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert!((&a * &a.conj()).is_real());
        }

        #[test]
        fn float_embedding_is_a_homomorphism(a in arb_cyclo(), b in arb_cyclo()) {
            let (x, y) = (a.to_complex(), b.to_complex());
            let p = (&a * &b).to_complex();
            prop_assert!(close(p, (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
            let s = (&a + &b).to_complex();
            prop_assert!(close(s, (x.0 + y.0, x.1 + y.1)));
        }

        #[test]
        fn lift_preserves_value(a in arb_cyclo(), m in 1u32..5) {
            let l = a.lift(a.conductor() * m);
            prop_assert_eq!(&l, &a);
            prop_assert!(close(l.to_complex(), a.to_complex()));
        }

        #[test]
        fn roots_of_unity_multiply(n in 1u32..60, j in -100i64..100, k in -100i64..100) {
            let p = &CycloNumber::root_of_unity(n, j) * &CycloNumber::root_of_unity(n, k);
            prop_assert_eq!(p, CycloNumber::root_of_unity(n, j + k));
        }
    }
}
