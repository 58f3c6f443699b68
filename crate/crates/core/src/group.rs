//! Concrete finite groups as multiplication tables.
//!
//! Elements are `0..order` with the identity at index 0. The parametric
//! families are built from explicit normal forms; T*, O* and I* come from
//! coset enumeration of their binary polyhedral presentations.

use std::fmt;

use crate::coset;
use crate::error::{Error, Result};
use crate::word::{parse_word, Presentation};

/// Default table cap for direct products (entries, i.e. order squared).
pub const DEFAULT_PRODUCT_MAX_ENTRIES: u64 = 1_000_000;
/// Default table cap for a single family member; admits order up to 2000.
pub const DEFAULT_FAMILY_MAX_ENTRIES: u64 = 4_000_000;

/// The seven atom families that appear as factors of spherical groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Z_n
    Cyclic { n: u64 },
    /// D*_{4p}
    BinaryDihedral { p: u64 },
    /// D'_{2^{k+2} p}, p odd and at least 3
    DPrime { k: u32, p: u64 },
    /// T*_24
    TStar,
    /// T'_{8 3^k}, k >= 1
    TPrime { k: u32 },
    /// O*_48
    OStar,
    /// I*_120
    IStar,
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::Cyclic { n: 0 } => Err(Error::params("Z(n)", "n >= 1")),
            Family::BinaryDihedral { p: 0 } => Err(Error::params("Dstar(p)", "p >= 1")),
            Family::DPrime { p, .. } if p < 3 || p % 2 == 0 => {
                Err(Error::params("Dprime(k,p)", "p odd and p >= 3"))
            }
            Family::DPrime { k, .. } if k > 40 => Err(Error::params("Dprime(k,p)", "k <= 40")),
            Family::TPrime { k: 0 } => Err(Error::params("Tprime(k)", "k >= 1")),
            Family::TPrime { k } if k > 30 => Err(Error::params("Tprime(k)", "k <= 30")),
            _ => Ok(()),
        }
    }

    /// Group order from the closed-form formula (saturating).
    pub fn order(&self) -> u64 {
        match *self {
            Family::Cyclic { n } => n,
            Family::BinaryDihedral { p } => p.saturating_mul(4),
            Family::DPrime { k, p } => 2u64
                .checked_pow(k + 2)
                .and_then(|t| t.checked_mul(p))
                .unwrap_or(u64::MAX),
            Family::TStar => 24,
            Family::TPrime { k } => 3u64
                .checked_pow(k)
                .and_then(|t| t.checked_mul(8))
                .unwrap_or(u64::MAX),
            Family::OStar => 48,
            Family::IStar => 120,
        }
    }

    /// Name in expression syntax, e.g. `Dprime(1,3)`.
    pub fn name(&self) -> String {
        match *self {
            Family::Cyclic { n } => format!("Z({n})"),
            Family::BinaryDihedral { p } => format!("Dstar({p})"),
            Family::DPrime { k, p } => format!("Dprime({k},{p})"),
            Family::TStar => "Tstar".into(),
            Family::TPrime { k } => format!("Tprime({k})"),
            Family::OStar => "Ostar".into(),
            Family::IStar => "Istar".into(),
        }
    }

    /// Generator names used by the normal form (and by column words in the
    /// character tables).
    pub fn generator_names(&self) -> &'static [char] {
        match self {
            Family::Cyclic { .. } => &['g'],
            Family::BinaryDihedral { .. } => &['a', 'x'],
            Family::DPrime { .. } => &['x', 'y'],
            Family::TPrime { .. } => &['x', 'y', 'z'],
            Family::TStar | Family::OStar | Family::IStar => &['a', 'b'],
        }
    }

    /// A presentation on [`Family::generator_names`].
    pub fn presentation(&self) -> Presentation {
        let gens = self.generator_names();
        let rels: Vec<String> = match *self {
            Family::Cyclic { n } => vec![format!("g^{n}")],
            Family::BinaryDihedral { p } => {
                vec![format!("a^{p} = x^2"), "x*a*x^-1 = a^-1".into()]
            }
            Family::DPrime { k, p } => vec![
                format!("x^{}", 1u64 << (k + 2)),
                format!("y^{p}"),
                "x*y^-1 = y*x".into(),
            ],
            Family::TPrime { k } => vec![
                "x^2 = (x*y)^2 = y^2".into(),
                "z*x*z^-1 = y".into(),
                "z*y*z^-1 = x*y".into(),
                format!("z^{}", 3u64.pow(k)),
            ],
            Family::TStar => vec!["(a*b)^2 = a^3 = b^3".into()],
            Family::OStar => vec!["(a*b)^2 = a^3 = b^4".into()],
            Family::IStar => vec!["(a*b)^2 = a^3 = b^5".into()],
        };
        let refs: Vec<&str> = rels.iter().map(String::as_str).collect();
        Presentation::new(gens, &refs).expect("built-in presentation parses")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    gen_names: Vec<char>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Build from a row-major table, checking identity at 0, closure and
    /// inverses. Associativity is the caller's responsibility; see
    /// [`FiniteGroup::is_associative`].
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        mul: Vec<u32>,
        generators: Vec<usize>,
        gen_names: Vec<char>,
        labels: Vec<String>,
    ) -> Result<FiniteGroup> {
        if order == 0 || mul.len() != order * order || labels.len() != order {
            return Err(Error::Inconsistent("table shape".into()));
        }
        if mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::Inconsistent("table not closed".into()));
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::Inconsistent("index 0 is not the identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let Some(y) = row.iter().position(|&v| v == 0) else {
                return Err(Error::Inconsistent(format!("element {x} has no inverse")));
            };
            inv[x] = y as u32;
        }
        Ok(FiniteGroup {
            name: name.into(),
            order,
            mul,
            inv,
            generators,
            gen_names,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = 0;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<u64> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    /// Generating set (element indices).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    /// Evaluate a word such as `a^2*x` over the named generators.
    pub fn eval_word(&self, word: &str) -> Result<usize> {
        if self.gen_names.is_empty() {
            return Err(Error::Unsupported(format!(
                "{} has no named generators",
                self.name
            )));
        }
        let w = parse_word(word, &self.gen_names)?;
        Ok(w.iter().fold(0, |acc, l| {
            let g = self.generators[l.gen];
            self.mul(acc, if l.inv { self.inv(g) } else { g })
        }))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Exhaustive O(n^3) associativity check.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.mul(x, y);
                (0..n).all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    /// Whether `generators` generate the whole group.
    pub fn generated_by(&self, gens: &[usize]) -> bool {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.order
    }
}

fn check_budget(order: u64, max_entries: u64, what: &str) -> Result<usize> {
    let entries = order.saturating_mul(order);
    if entries > max_entries {
        return Err(Error::resource(
            format!("{what} multiplication table entries"),
            entries,
            max_entries,
        ));
    }
    Ok(order as usize)
}

/// Build a family member with the default table cap.
pub fn construct_family(f: Family) -> Result<FiniteGroup> {
    construct_family_with_cap(f, DEFAULT_FAMILY_MAX_ENTRIES)
}

pub fn construct_family_with_cap(f: Family, max_entries: u64) -> Result<FiniteGroup> {
    f.validate()?;
    let n = check_budget(f.order(), max_entries, &f.name())?;
    match f {
        Family::Cyclic { .. } => Ok(cyclic(n)),
        Family::BinaryDihedral { p } => Ok(binary_dihedral(p as usize)),
        Family::DPrime { k, p } => Ok(dprime(k, p as usize)),
        Family::TPrime { k } => Ok(tprime(k)),
        Family::TStar | Family::OStar | Family::IStar => {
            let pres = f.presentation();
            let g = coset::enumerate(&pres, coset::default_max_cosets(Some(f.order())))?;
            if g.order() as u64 != f.order() {
                return Err(Error::Inconsistent(format!(
                    "{f}: enumeration gave order {}",
                    g.order()
                )));
            }
            Ok(g.renamed(f.name()))
        }
    }
}

impl FiniteGroup {
    pub(crate) fn renamed(mut self, name: String) -> FiniteGroup {
        self.name = name;
        self
    }
}

fn build(
    name: String,
    n: usize,
    gens: Vec<usize>,
    gen_names: &[char],
    label: impl Fn(usize) -> String,
    prod: impl Fn(usize, usize) -> usize,
) -> FiniteGroup {
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mul.push(prod(x, y) as u32);
        }
    }
    let labels = (0..n).map(label).collect();
    FiniteGroup::from_table(name, n, mul, gens, gen_names.to_vec(), labels)
        .expect("normal-form table is a group table")
}

fn power_label(parts: &[(char, usize)]) -> String {
    let s: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e != 0)
        .map(|&(c, e)| {
            if e == 1 {
                c.to_string()
            } else {
                format!("{c}^{e}")
            }
        })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join("*")
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    build(
        format!("Z({n})"),
        n,
        vec![1 % n],
        &['g'],
        |x| power_label(&[('g', x)]),
        |x, y| (x + y) % n,
    )
}

/// a^k x^l stored at l*2p + k; x a = a^-1 x, x^2 = a^p.
fn binary_dihedral(p: usize) -> FiniteGroup {
    let m = 2 * p;
    build(
        format!("Dstar({p})"),
        4 * p,
        vec![1 % m, m],
        &['a', 'x'],
        |e| power_label(&[('a', e % m), ('x', e / m)]),
        |e1, e2| {
            let (k1, l1) = (e1 % m, e1 / m);
            let (k2, l2) = (e2 % m, e2 / m);
            let k2 = if l1 == 1 { (m - k2) % m } else { k2 };
            let mut k = (k1 + k2) % m;
            let mut l = l1 + l2;
            if l == 2 {
                l = 0;
                k = (k + p) % m;
            }
            l * m + k
        },
    )
}

/// x^n y^l stored at n*p + l; y x = x y^-1.
fn dprime(k: u32, p: usize) -> FiniteGroup {
    let big = 1usize << (k + 2);
    build(
        format!("Dprime({k},{p})"),
        big * p,
        vec![p, 1],
        &['x', 'y'],
        |e| power_label(&[('x', e / p), ('y', e % p)]),
        |e1, e2| {
            let (n1, l1) = (e1 / p, e1 % p);
            let (n2, l2) = (e2 / p, e2 % p);
            let l1 = if n2 % 2 == 1 { (p - l1) % p } else { l1 };
            ((n1 + n2) % big) * p + (l1 + l2) % p
        },
    )
}

/// Quaternion units: code = unit + 4*sign, unit in {1,i,j,k}.
fn q8_mul(a: usize, b: usize) -> usize {
    // (sign, unit) of unit_a * unit_b
    const U: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (s, u) = U[a % 4][b % 4];
    u + 4 * ((s + a / 4 + b / 4) % 2)
}

/// z acts by x -> y -> xy (i -> j -> k -> i).
fn q8_phi(w: usize, times: usize) -> usize {
    let (u, s) = (w % 4, w / 4);
    let u = if u == 0 { 0 } else { (u - 1 + times) % 3 + 1 };
    u + 4 * s
}

fn q8_label(w: usize) -> &'static str {
    ["1", "x", "y", "x*y", "x^2", "x^3", "y^3", "y*x"][w]
}

/// w z^a stored at a*8 + w.
fn tprime(k: u32) -> FiniteGroup {
    let t = 3usize.pow(k);
    build(
        format!("Tprime({k})"),
        8 * t,
        vec![1, 2, 8 % (8 * t)],
        &['x', 'y', 'z'],
        |e| {
            let (a, w) = (e / 8, e % 8);
            match (w, a) {
                (_, 0) => q8_label(w).to_string(),
                (0, _) => power_label(&[('z', a)]),
                _ => format!("{}*{}", q8_label(w), power_label(&[('z', a)])),
            }
        },
        |e1, e2| {
            let (a1, w1) = (e1 / 8, e1 % 8);
            let (a2, w2) = (e2 / 8, e2 % 8);
            ((a1 + a2) % t) * 8 + q8_mul(w1, q8_phi(w2, a1 % 3))
        },
    )
}

/// Direct product with the default cap. Element (a, b) is stored at
/// `a * |B| + b`; the character-table tensoring relies on this layout.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_with_cap(a, b, DEFAULT_PRODUCT_MAX_ENTRIES)
}

pub fn direct_product_with_cap(
    a: &FiniteGroup,
    b: &FiniteGroup,
    max_entries: u64,
) -> Result<FiniteGroup> {
    let order = (a.order as u64).saturating_mul(b.order as u64);
    let name = format!("{} x {}", a.name, b.name);
    let n = check_budget(order, max_entries, &name)?;
    let nb = b.order;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            mul.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    let mut gens: Vec<usize> = a.generators.iter().map(|&g| g * nb).collect();
    gens.extend(b.generators.iter().copied());
    let labels = (0..n)
        .map(|x| format!("({},{})", a.labels[x / nb], b.labels[x % nb]))
        .collect();
    FiniteGroup::from_table(name, n, mul, gens, Vec::new(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small() -> Vec<Family> {
        vec![
            Family::Cyclic { n: 1 },
            Family::Cyclic { n: 12 },
            Family::BinaryDihedral { p: 1 },
            Family::BinaryDihedral { p: 2 },
            Family::BinaryDihedral { p: 5 },
            Family::DPrime { k: 0, p: 3 },
            Family::DPrime { k: 1, p: 5 },
            Family::TPrime { k: 1 },
            Family::TPrime { k: 2 },
            Family::TStar,
            Family::OStar,
            Family::IStar,
        ]
    }

    #[test]
    fn families_are_groups_of_expected_order() {
        for f in all_small() {
            let g = construct_family(f).unwrap();
            assert_eq!(g.order() as u64, f.order(), "{f}");
            assert!(g.is_associative(), "{f}");
            assert!(g.generated_by(g.generators()), "{f}");
        }
    }

    #[test]
    fn normal_forms_satisfy_their_presentations() {
        for f in all_small() {
            let g = construct_family(f).unwrap();
            let pres = f.presentation();
            for r in &pres.relators {
                let v = r.iter().fold(0, |acc, l| {
                    let x = g.generators()[l.gen];
                    g.mul(acc, if l.inv { g.inv(x) } else { x })
                });
                assert_eq!(v, 0, "{f}: relator fails");
            }
        }
    }

    #[test]
    fn known_element_orders() {
        // Q8 inside T'(1): six elements of order 4, one of order 2
        let g = construct_family(Family::TPrime { k: 1 }).unwrap();
        let orders = g.element_orders();
        let count = |o| orders.iter().filter(|&&x| x == o).count();
        assert_eq!(
            (count(1), count(2), count(3), count(4), count(6)),
            (1, 1, 8, 6, 8)
        );

        let g = construct_family(Family::BinaryDihedral { p: 3 }).unwrap();
        assert_eq!(g.element_order(g.eval_word("x").unwrap()), 4);
        assert_eq!(g.eval_word("x^2").unwrap(), g.eval_word("a^3").unwrap());
        assert!(!g.is_abelian());
    }

    #[test]
    fn invalid_parameters() {
        assert!(construct_family(Family::Cyclic { n: 0 }).is_err());
        assert!(construct_family(Family::DPrime { k: 1, p: 4 }).is_err());
        assert!(construct_family(Family::DPrime { k: 1, p: 1 }).is_err());
        assert!(construct_family(Family::TPrime { k: 0 }).is_err());
        assert!(matches!(
            construct_family_with_cap(Family::Cyclic { n: 2000 }, 1000),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn product_layout_and_cap() {
        let a = construct_family(Family::Cyclic { n: 3 }).unwrap();
        let b = construct_family(Family::BinaryDihedral { p: 2 }).unwrap();
        let g = direct_product(&a, &b).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.is_associative());
        assert!(g.generated_by(g.generators()));
        let x = 2 * 8 + 5;
        assert_eq!(g.element_order(x), 12);
        let big = construct_family(Family::Cyclic { n: 1001 }).unwrap();
        let one = construct_family(Family::Cyclic { n: 1 }).unwrap();
        assert!(matches!(
            direct_product(&big, &one),
            Err(Error::Resource { .. })
        ));
    }
}
