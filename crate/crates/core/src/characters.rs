//! Character tables of the spherical families and their direct products,
//! and the character-theoretic formulas for d₁ and d₂.
//!
//! Each family table is written down column by column in terms of a
//! representative word over the family's generators. Columns are attached
//! to the computed conjugacy classes by evaluating that word in the concrete
//! group; a column that lands on an already used class, or a class left
//! uncovered, is an error. Declared class sizes are checked as well.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::conjugacy::{compute_classes, ClassData};
use crate::cyclo::{weighted_inner_product, CycloNumber, IntegralVector};
use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::group::{Family, FiniteGroup};

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_name: String,
    /// Common conductor of all entries.
    pub conductor: u32,
    pub row_labels: Vec<String>,
    /// `values[row][class]`, classes in [`ClassData`] order.
    pub values: Vec<Vec<CycloNumber>>,
    /// Row is real-valued (conjugation-invariant).
    pub real: Vec<bool>,
    /// Label of each class (the defining word for family tables).
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    /// Class indices in the order the columns were written down.
    pub layout: Vec<usize>,
}

impl CharacterTable {
    pub fn num_rows(&self) -> usize {
        self.values.len()
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn column(&self, c: usize) -> Vec<CycloNumber> {
        self.values.iter().map(|row| row[c].clone()).collect()
    }

    pub fn degree(&self, row: usize) -> BigInt {
        self.values[row][0]
            .as_integer()
            .expect("character degree is an integer")
    }
}

struct Column {
    word: String,
    size: usize,
}

fn col(word: impl Into<String>, size: usize) -> Column {
    Column {
        word: word.into(),
        size,
    }
}

/// Rows written in column order.
struct RawTable {
    columns: Vec<Column>,
    rows: Vec<(String, Vec<CycloNumber>)>,
}

fn root(n: u64, k: i64) -> CycloNumber {
    CycloNumber::root_of_unity(n as u32, k)
}

fn int(v: i64) -> CycloNumber {
    CycloNumber::from_int(v)
}

fn scaled(v: i64, x: &CycloNumber) -> CycloNumber {
    x.scale(&BigRational::from_integer(v.into()))
}

fn cyclic_table(n: u64) -> RawTable {
    let columns = (0..n).map(|m| col(format!("g^{m}"), 1)).collect();
    let rows = (0..n)
        .map(|l| {
            let vals = (0..n).map(|m| root(n, (l * m) as i64)).collect();
            (format!("V_{l}"), vals)
        })
        .collect();
    RawTable { columns, rows }
}

fn binary_dihedral_table(p: u64) -> RawTable {
    let two_p = 2 * p;
    let mut columns = vec![col("1", 1)];
    for k in 1..p {
        columns.push(col(format!("a^{k}"), 2));
    }
    columns.push(col(format!("a^{p}"), 1));
    columns.push(col("x", p as usize));
    columns.push(col("a*x", p as usize));
    let sign = |k: u64| int(if k.is_multiple_of(2) { 1 } else { -1 });
    let on_a = |f: &dyn Fn(u64) -> CycloNumber| (0..=p).map(f).collect::<Vec<_>>();
    let with = |mut a: Vec<CycloNumber>, x: CycloNumber, ax: CycloNumber| {
        a.push(x);
        a.push(ax);
        a
    };
    let i = root(4, 1);
    let (v3x, v3ax, v4x, v4ax) = if p.is_multiple_of(2) {
        (int(1), int(-1), int(-1), int(1))
    } else {
        (i.clone(), -&i, -&i, i.clone())
    };
    let mut rows = vec![
        ("V1".to_string(), with(on_a(&|_| int(1)), int(1), int(1))),
        ("V2".to_string(), with(on_a(&|_| int(1)), int(-1), int(-1))),
        ("V3".to_string(), with(on_a(&sign), v3x, v3ax)),
        ("V4".to_string(), with(on_a(&sign), v4x, v4ax)),
    ];
    for l in 1..p {
        let vals = on_a(&|k| {
            CycloNumber::from_powers(two_p as u32, &[((k * l) as i64, 1), (-((k * l) as i64), 1)])
        });
        rows.push((format!("V2_{l}"), with(vals, int(0), int(0))));
    }
    RawTable { columns, rows }
}

fn dprime_table(k: u32, p: u64) -> RawTable {
    let big = 1u64 << (k + 2);
    let half = big / 2;
    let pairs = (p - 1) / 2;
    let mut columns = Vec::new();
    for m in 0..half {
        columns.push(col(format!("x^{}", 2 * m), 1));
        for l in 1..=pairs {
            columns.push(col(format!("x^{}*y^{l}", 2 * m), 2));
        }
        columns.push(col(format!("x^{}", 2 * m + 1), p as usize));
    }
    let mut rows = Vec::new();
    for j in 0..big {
        let mut vals = Vec::new();
        for m in 0..half {
            let even = root(big, (2 * m * j) as i64);
            for _ in 0..=pairs {
                vals.push(even.clone());
            }
            vals.push(root(big, ((2 * m + 1) * j) as i64));
        }
        rows.push((format!("V1_{j}"), vals));
    }
    for s in 1..=pairs {
        for t in 0..half {
            let mut vals = Vec::new();
            for m in 0..half {
                let z = root(big, (2 * m * t) as i64);
                vals.push(scaled(2, &z));
                for l in 1..=pairs {
                    let c = CycloNumber::from_powers(
                        p as u32,
                        &[((s * l) as i64, 1), (-((s * l) as i64), 1)],
                    );
                    vals.push(&z * &c);
                }
                vals.push(int(0));
            }
            rows.push((format!("V2_{s},{t}"), vals));
        }
    }
    RawTable { columns, rows }
}

fn tprime_table(k: u32) -> RawTable {
    let t = 3u64.pow(k);
    let tm = t / 3;
    let mut columns = Vec::new();
    for m in 0..tm {
        let e = 3 * m;
        columns.push(col(format!("z^{e}"), 1));
        columns.push(col(format!("x^2*z^{e}"), 1));
        columns.push(col(format!("x^2*y*z^{e}"), 6));
        columns.push(col(format!("z^{}", e + 1), 4));
        columns.push(col(format!("x*z*z^{e}"), 4));
        columns.push(col(format!("z^{}", e + 2), 4));
        columns.push(col(format!("x^3*z^2*z^{e}"), 4));
    }
    let z = |e: u64, l: u64| root(t, (e * l) as i64);
    let mut rows = Vec::new();
    for l in 0..t {
        let mut vals = Vec::new();
        for m in 0..tm {
            let (a, b, c) = (z(3 * m, l), z(3 * m + 1, l), z(3 * m + 2, l));
            vals.extend([a.clone(), a.clone(), a, b.clone(), b, c.clone(), c]);
        }
        rows.push((format!("V1_{l}"), vals));
    }
    for l in 0..t {
        let mut vals = Vec::new();
        for m in 0..tm {
            let (a, b, c) = (z(3 * m, l), z(3 * m + 1, l), z(3 * m + 2, l));
            vals.extend([scaled(2, &a), scaled(-2, &a), int(0), -&b, b, -&c, c]);
        }
        rows.push((format!("V2_{l}"), vals));
    }
    for l in 0..tm {
        let mut vals = Vec::new();
        for m in 0..tm {
            let a = z(3 * m, l);
            vals.extend([
                scaled(3, &a),
                scaled(3, &a),
                -&a,
                int(0),
                int(0),
                int(0),
                int(0),
            ]);
        }
        rows.push((format!("V3_{l}"), vals));
    }
    RawTable { columns, rows }
}

fn parse_rows(
    rows: &[(&str, [&str; 9])],
    width: usize,
    atoms: &dyn Fn(&str) -> CycloNumber,
) -> Vec<(String, Vec<CycloNumber>)> {
    rows.iter()
        .map(|(name, vals)| {
            let v = vals[..width]
                .iter()
                .map(|s| match s.strip_prefix('-') {
                    Some(rest) => -atoms(rest),
                    None => atoms(s),
                })
                .collect();
            (name.to_string(), v)
        })
        .collect()
}

/// T* with the columns e, z, x²y, x², z², x²z, x³z² re-expressed in the
/// generators a, b of ⟨a,b | (ab)² = a³ = b³⟩: z ↦ a², x²y ↦ ab, x² ↦ a³.
fn tstar_table() -> RawTable {
    let columns = vec![
        col("1", 1),
        col("a^2", 4),
        col("a*b", 6),
        col("a^3", 1),
        col("a^4", 4),
        col("a^5", 4),
        col("a", 4),
    ];
    const R: [(&str, [&str; 9]); 7] = [
        ("V1", ["1", "1", "1", "1", "1", "1", "1", "", ""]),
        ("V2", ["1", "w2", "1", "1", "w", "w2", "w", "", ""]),
        ("V3", ["1", "w", "1", "1", "w2", "w", "w2", "", ""]),
        ("V4", ["2", "-1", "0", "-2", "-1", "1", "1", "", ""]),
        ("V5", ["2", "-w", "0", "-2", "-w2", "w", "w2", "", ""]),
        ("V6", ["2", "-w2", "0", "-2", "-w", "w2", "w", "", ""]),
        ("V7", ["3", "0", "-1", "3", "0", "0", "0", "", ""]),
    ];
    let atoms = |s: &str| match s {
        "w" => root(3, 1),
        "w2" => root(3, 2),
        n => int(n.parse().unwrap()),
    };
    RawTable {
        columns,
        rows: parse_rows(&R, 7, &atoms),
    }
}

fn ostar_table() -> RawTable {
    let columns = vec![
        col("1", 1),
        col("a*b", 12),
        col("a^2", 8),
        col("b^2", 6),
        col("a^3", 1),
        col("b", 6),
        col("a", 8),
        col("a^2*b", 6),
    ];
    const R: [(&str, [&str; 9]); 8] = [
        ("A1", ["1", "1", "1", "1", "1", "1", "1", "1", ""]),
        ("A2", ["1", "-1", "1", "1", "1", "-1", "1", "-1", ""]),
        ("A3", ["2", "0", "-1", "2", "2", "0", "-1", "0", ""]),
        ("A4", ["2", "0", "-1", "0", "-2", "-r2", "1", "r2", ""]),
        ("A5", ["2", "0", "-1", "0", "-2", "r2", "1", "-r2", ""]),
        ("A6", ["3", "1", "0", "-1", "3", "-1", "0", "-1", ""]),
        ("A7", ["3", "-1", "0", "-1", "3", "1", "0", "1", ""]),
        ("A8", ["4", "0", "1", "0", "-4", "0", "-1", "0", ""]),
    ];
    let atoms = |s: &str| match s {
        "r2" => CycloNumber::from_powers(8, &[(1, 1), (-1, 1)]),
        n => int(n.parse().unwrap()),
    };
    RawTable {
        columns,
        rows: parse_rows(&R, 8, &atoms),
    }
}

fn istar_table() -> RawTable {
    let columns = vec![
        col("1", 1),
        col("a^3", 1),
        col("(a^2*b^2)^2*a", 30),
        col("a*b*a^2*b", 20),
        col("a", 20),
        col("(a^2*b^2)^2", 12),
        col("a^2*b^2", 12),
        col("a^2*b^2*a", 12),
        col("b", 12),
    ];
    const R: [(&str, [&str; 9]); 9] = [
        ("A1", ["1", "1", "1", "1", "1", "1", "1", "1", "1"]),
        ("A2", ["2", "-2", "0", "-1", "1", "-fs", "-f", "fs", "f"]),
        ("A3", ["2", "-2", "0", "-1", "1", "-f", "-fs", "f", "fs"]),
        ("A4", ["3", "3", "-1", "0", "0", "f", "fs", "f", "fs"]),
        ("A5", ["3", "3", "-1", "0", "0", "fs", "f", "fs", "f"]),
        ("A6", ["4", "4", "0", "1", "1", "-1", "-1", "-1", "-1"]),
        ("A7", ["4", "-4", "0", "1", "-1", "-1", "-1", "1", "1"]),
        ("A8", ["5", "5", "1", "-1", "-1", "0", "0", "0", "0"]),
        ("A9", ["6", "-6", "0", "0", "0", "1", "1", "-1", "-1"]),
    ];
    // φ = −(ζ₅² + ζ₅³), φ* = 1 − φ
    let phi = -CycloNumber::from_powers(5, &[(2, 1), (3, 1)]);
    let phi_star = &CycloNumber::one() - &phi;
    let atoms = |s: &str| match s {
        "f" => phi.clone(),
        "fs" => phi_star.clone(),
        n => int(n.parse().unwrap()),
    };
    RawTable {
        columns,
        rows: parse_rows(&R, 9, &atoms),
    }
}

fn raw_table(f: Family) -> RawTable {
    match f {
        Family::Cyclic { n } => cyclic_table(n),
        Family::BinaryDihedral { p } => binary_dihedral_table(p),
        Family::DPrime { k, p } => dprime_table(k, p),
        Family::TStar => tstar_table(),
        Family::TPrime { k } => tprime_table(k),
        Family::OStar => ostar_table(),
        Family::IStar => istar_table(),
    }
}

fn finish(
    name: String,
    row_labels: Vec<String>,
    mut values: Vec<Vec<CycloNumber>>,
    class_labels: Vec<String>,
    class_sizes: Vec<usize>,
    layout: Vec<usize>,
) -> CharacterTable {
    let conductor = values
        .iter()
        .flatten()
        .fold(1u32, |acc, v| num::integer::lcm(acc, v.conductor()));
    for row in values.iter_mut() {
        for v in row.iter_mut() {
            if v.conductor() != conductor {
                *v = v.lift(conductor);
            }
        }
    }
    let real = values
        .iter()
        .map(|row| row.iter().all(CycloNumber::is_real))
        .collect();
    CharacterTable {
        group_name: name,
        conductor,
        row_labels,
        values,
        real,
        class_labels,
        class_sizes,
        layout,
    }
}

/// Table of a single family member, aligned to `classes` of `g`.
pub fn family_table(f: Family, g: &FiniteGroup, classes: &ClassData) -> Result<CharacterTable> {
    align(f, raw_table(f), g, classes)
}

fn align(f: Family, raw: RawTable, g: &FiniteGroup, classes: &ClassData) -> Result<CharacterTable> {
    let k = classes.num_classes();
    if raw.columns.len() != k || raw.rows.len() != k {
        return Err(Error::Inconsistent(format!(
            "{f}: table is {}x{}, group has {k} classes",
            raw.rows.len(),
            raw.columns.len()
        )));
    }
    let mut layout = Vec::with_capacity(k);
    let mut owner = vec![usize::MAX; k];
    for (j, c) in raw.columns.iter().enumerate() {
        let x = g.eval_word(&c.word)?;
        let cl = classes.class_of[x];
        if owner[cl] != usize::MAX {
            return Err(Error::Inconsistent(format!(
                "{f}: columns '{}' and '{}' fall in the same class",
                raw.columns[owner[cl]].word, c.word
            )));
        }
        if classes.sizes[cl] != c.size {
            return Err(Error::Inconsistent(format!(
                "{f}: column '{}' declares class size {}, found {}",
                c.word, c.size, classes.sizes[cl]
            )));
        }
        owner[cl] = j;
        layout.push(cl);
    }
    let mut class_labels = vec![String::new(); k];
    for (j, &cl) in layout.iter().enumerate() {
        class_labels[cl] = raw.columns[j].word.clone();
    }
    let mut row_labels = Vec::with_capacity(k);
    let mut values = Vec::with_capacity(k);
    for (label, vals) in raw.rows {
        let mut aligned = vec![CycloNumber::zero(); k];
        for (j, v) in vals.into_iter().enumerate() {
            aligned[layout[j]] = v;
        }
        row_labels.push(label);
        values.push(aligned);
    }
    Ok(finish(
        f.name(),
        row_labels,
        values,
        class_labels,
        classes.sizes.clone(),
        layout,
    ))
}

/// Character table of `expr`, aligned to the classes of `g` (which must be
/// `expr.build(..)`). Products are tensor products of the factor tables.
pub fn character_table(
    expr: &GroupExpr,
    g: &FiniteGroup,
    classes: &ClassData,
) -> Result<CharacterTable> {
    if expr.atoms.len() == 1 {
        return family_table(expr.atoms[0], g, classes);
    }
    let (last, init) = expr.atoms.split_last().unwrap();
    let left_expr = GroupExpr {
        atoms: init.to_vec(),
    };
    let left_g = left_expr.build(u64::MAX, u64::MAX)?;
    let left_c = compute_classes(&left_g)?;
    let left = character_table(&left_expr, &left_g, &left_c)?;
    let right_expr = GroupExpr::atom(*last);
    let right_g = right_expr.build(u64::MAX, u64::MAX)?;
    let right_c = compute_classes(&right_g)?;
    let right = character_table(&right_expr, &right_g, &right_c)?;
    tensor(&left, &left_c, &right, &right_c, g, classes)
}

fn tensor(
    a: &CharacterTable,
    ac: &ClassData,
    b: &CharacterTable,
    bc: &ClassData,
    g: &FiniteGroup,
    classes: &ClassData,
) -> Result<CharacterTable> {
    let nb = bc.group_order;
    if ac.group_order * nb != g.order() {
        return Err(Error::Inconsistent("product order mismatch".into()));
    }
    let k = classes.num_classes();
    if a.num_classes() * b.num_classes() != k {
        return Err(Error::Inconsistent("product class count mismatch".into()));
    }
    // factor classes of each product class, via its representative
    let pair: Vec<(usize, usize)> = classes
        .reps
        .iter()
        .map(|&r| (ac.class_of[r / nb], bc.class_of[r % nb]))
        .collect();
    let mut seen = std::collections::HashSet::new();
    if !pair.iter().all(|p| seen.insert(*p)) {
        return Err(Error::Inconsistent("product classes do not split".into()));
    }
    let mut row_labels = Vec::new();
    let mut values = Vec::new();
    for (i, ra) in a.values.iter().enumerate() {
        for (j, rb) in b.values.iter().enumerate() {
            row_labels.push(format!("{}⊗{}", a.row_labels[i], b.row_labels[j]));
            values.push(pair.iter().map(|&(x, y)| &ra[x] * &rb[y]).collect());
        }
    }
    let class_labels = pair
        .iter()
        .map(|&(x, y)| format!("({},{})", a.class_labels[x], b.class_labels[y]))
        .collect();
    let mut layout = Vec::with_capacity(k);
    for &x in &a.layout {
        for &y in &b.layout {
            layout.push(pair.iter().position(|&p| p == (x, y)).unwrap());
        }
    }
    Ok(finish(
        g.name().to_string(),
        row_labels,
        values,
        class_labels,
        classes.sizes.clone(),
        layout,
    ))
}

fn weights(classes: &ClassData) -> Vec<u64> {
    classes.sizes.iter().map(|&s| s as u64).collect()
}

/// Row and column orthogonality, exactly.
pub fn verify_orthogonality(t: &CharacterTable, classes: &ClassData) -> Result<()> {
    let k = t.num_classes();
    let n = classes.group_order as i64;
    if t.num_rows() != k {
        return Err(Error::Inconsistent("table is not square".into()));
    }
    let w = weights(classes);
    let rows = InnerProducts::new(&t.values, t.conductor);
    for i in 0..k {
        for j in i..k {
            let v = rows.get(&w, i, j);
            let want = if i == j { n } else { 0 };
            if v != CycloNumber::from_int(want) {
                return Err(Error::Inconsistent(format!(
                    "{}: rows {} and {} have inner product {v:?}",
                    t.group_name, t.row_labels[i], t.row_labels[j]
                )));
            }
        }
    }
    let cols: Vec<Vec<CycloNumber>> = (0..k).map(|c| t.column(c)).collect();
    let cols = InnerProducts::new(&cols, t.conductor);
    let ones = vec![1u64; k];
    for c in 0..k {
        for d in c..k {
            let v = cols.get(&ones, c, d);
            let want = if c == d {
                classes.centralizer_size(c) as i64
            } else {
                0
            };
            if v != CycloNumber::from_int(want) {
                return Err(Error::Inconsistent(format!(
                    "{}: columns {} and {} have inner product {v:?}",
                    t.group_name, t.class_labels[c], t.class_labels[d]
                )));
            }
        }
    }
    Ok(())
}

/// Pairwise inner products of a fixed set of vectors, lifted once.
struct InnerProducts<'a> {
    vectors: &'a [Vec<CycloNumber>],
    lifted: Option<Vec<IntegralVector>>,
}

impl<'a> InnerProducts<'a> {
    fn new(vectors: &'a [Vec<CycloNumber>], conductor: u32) -> Self {
        let lifted = vectors
            .iter()
            .map(|v| IntegralVector::new(v, conductor))
            .collect();
        InnerProducts { vectors, lifted }
    }

    fn get(&self, w: &[u64], i: usize, j: usize) -> CycloNumber {
        self.lifted
            .as_ref()
            .and_then(|l| l[i].inner_product(w, &l[j]))
            .unwrap_or_else(|| weighted_inner_product(w, &self.vectors[i], &self.vectors[j]))
    }
}

/// ⟨ψ, χ_j⟩ for a class function ψ, as rationals.
fn multiplicities(
    t: &CharacterTable,
    classes: &ClassData,
    psi: &[CycloNumber],
) -> Vec<CycloNumber> {
    let w = weights(classes);
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(classes.group_order));
    t.values
        .iter()
        .map(|row| weighted_inner_product(&w, psi, row).scale(&inv_n))
        .collect()
}

/// Frobenius–Schur indicator of each row: (1/|π|) Σ_g χ(g²).
pub fn frobenius_schur(t: &CharacterTable, classes: &ClassData) -> Result<Vec<i32>> {
    let n = BigInt::from(classes.group_order);
    t.values
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let s: CycloNumber = (0..t.num_classes())
                .map(|c| {
                    row[classes.square[c]]
                        .scale(&BigRational::from_integer(classes.sizes[c].into()))
                })
                .sum();
            let q = s.as_rational().ok_or_else(|| {
                Error::Inconsistent(format!(
                    "{}: indicator of {} not rational",
                    t.group_name, t.row_labels[i]
                ))
            })? / &n;
            match q.to_integer() {
                v if q.is_integer() && v.abs() <= BigInt::one() => Ok(i32::try_from(v).unwrap()),
                _ => Err(Error::Inconsistent(format!(
                    "{}: indicator of {} is {q}",
                    t.group_name, t.row_labels[i]
                ))),
            }
        })
        .collect()
}

/// Check the columns against the square map: the symmetric and exterior
/// squares of every row, (χ(g)² ± χ(g²))/2, must decompose with
/// non-negative integer multiplicities, and the Frobenius–Schur indicator
/// must be nonzero exactly on the real rows.
pub fn verify_power_maps(t: &CharacterTable, classes: &ClassData) -> Result<()> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (i, row) in t.values.iter().enumerate() {
        let sq: Vec<CycloNumber> = row.iter().map(|v| v * v).collect();
        for sign in [1i64, -1] {
            let psi: Vec<CycloNumber> = (0..t.num_classes())
                .map(|c| {
                    let s = &row[classes.square[c]];
                    let v = if sign > 0 { &sq[c] + s } else { &sq[c] - s };
                    v.scale(&half)
                })
                .collect();
            for (j, m) in multiplicities(t, classes, &psi).into_iter().enumerate() {
                let ok = m
                    .as_rational()
                    .is_some_and(|q| q.is_integer() && !q.is_negative());
                if !ok {
                    return Err(Error::Inconsistent(format!(
                        "{}: {} of {} contains {} with multiplicity {m:?}",
                        t.group_name,
                        if sign > 0 { "Sym²" } else { "Λ²" },
                        t.row_labels[i],
                        t.row_labels[j]
                    )));
                }
            }
        }
    }
    let fs = frobenius_schur(t, classes)?;
    for (i, &v) in fs.iter().enumerate() {
        if (v != 0) != t.real[i] {
            return Err(Error::Inconsistent(format!(
                "{}: {} has indicator {v} but real = {}",
                t.group_name, t.row_labels[i], t.real[i]
            )));
        }
    }
    Ok(())
}

/// S(c) = Σ over real-valued rows of χ(c), required to be an integer.
pub fn real_char_sum(t: &CharacterTable, c: usize) -> Result<BigInt> {
    let s: CycloNumber = t
        .values
        .iter()
        .zip(&t.real)
        .filter(|(_, &r)| r)
        .map(|(row, _)| row[c].clone())
        .sum();
    s.as_integer().ok_or_else(|| {
        Error::Inconsistent(format!(
            "{}: real character sum at {} is {s:?}",
            t.group_name, t.class_labels[c]
        ))
    })
}

/// d₂ = (1/(6|π|)) Σ_C |C| (S(g)³ + 3(|π|/|C|) S(g) + 2 S(g³)).
pub fn d2_char_formula(t: &CharacterTable, classes: &ClassData) -> Result<BigRational> {
    let n = BigInt::from(classes.group_order);
    let s: Vec<BigInt> = (0..t.num_classes())
        .map(|c| real_char_sum(t, c))
        .collect::<Result<_>>()?;
    let mut total = BigInt::zero();
    for c in 0..t.num_classes() {
        let size = BigInt::from(classes.sizes[c]);
        let cent = BigInt::from(classes.centralizer_size(c));
        total += &size * (&s[c] * &s[c] * &s[c] + 3 * &cent * &s[c] + 2 * &s[classes.cube[c]]);
    }
    Ok(BigRational::new(total, 6 * n))
}

/// d₁ with the permutation character of π×π on ℂπ taken from the table:
/// χ_W(g,h) = Σ_χ χ(g) conj χ(h).
pub fn d1_char_formula(t: &CharacterTable, classes: &ClassData) -> Result<BigRational> {
    let k = t.num_classes();
    let cols: Vec<Vec<CycloNumber>> = (0..k).map(|c| t.column(c)).collect();
    let ones = vec![1u64; t.num_rows()];
    let mut x = vec![vec![BigInt::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let v = weighted_inner_product(&ones, &cols[i], &cols[j]);
            x[i][j] = v.as_integer().ok_or_else(|| {
                Error::Inconsistent(format!(
                    "{}: permutation character not integral",
                    t.group_name
                ))
            })?;
        }
    }
    let mut total = BigInt::zero();
    for i in 0..k {
        for j in 0..k {
            let t1 = &x[i][j];
            let t2 = &x[classes.square[i]][classes.square[j]];
            let t3 = &x[classes.cube[i]][classes.cube[j]];
            let w = BigInt::from(classes.sizes[i] * classes.sizes[j]);
            total += w * (t1 * t1 * t1 + 3 * t1 * t2 + 2 * t3);
        }
    }
    let n = BigInt::from(classes.group_order);
    Ok(BigRational::new(total, 6 * &n * &n))
}
