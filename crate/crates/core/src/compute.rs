//! Dispatch to the individual routes, resource limits, cross-verification
//! and the family tables.

use std::time::Instant;

use num::{BigInt, BigRational};

use crate::burnside::{self, BurnsideMode};
use crate::characters;
use crate::closed_forms::{self, SphericalSpec};
use crate::conjugacy::{compute_classes, ClassData};
use crate::diagrams;
use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::group::{self, Family, FiniteGroup};
use crate::report::{DimensionReport, Method};

/// Name of the environment variable overriding the brute-force budgets.
pub const MAX_ORDER_ENV: &str = "THETA_DIM_MAX_ORDER";

/// Up to this order the Burnside route iterates all pairs explicitly; above
/// it uses the class-reduced sums.
pub const NAIVE_BURNSIDE_MAX_ORDER: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub family_max_entries: u64,
    pub product_max_entries: u64,
    pub burnside_max_order: usize,
    pub orbit_max_order: usize,
    pub diagram_max_order: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            family_max_entries: group::DEFAULT_FAMILY_MAX_ENTRIES,
            product_max_entries: group::DEFAULT_PRODUCT_MAX_ENTRIES,
            burnside_max_order: burnside::DEFAULT_BURNSIDE_MAX_ORDER,
            orbit_max_order: burnside::DEFAULT_ORBIT_MAX_ORDER,
            diagram_max_order: diagrams::DEFAULT_DIAGRAM_MAX_ORDER,
        }
    }
}

impl Limits {
    /// Set every brute-force order budget to `n`, growing the table caps to
    /// admit a group of order `n` if necessary.
    pub fn with_max_order(self, n: usize) -> Limits {
        let entries = (n as u64).saturating_mul(n as u64);
        Limits {
            family_max_entries: self.family_max_entries.max(entries),
            product_max_entries: self.product_max_entries.max(entries),
            burnside_max_order: n,
            orbit_max_order: n,
            diagram_max_order: n,
        }
    }

    /// Defaults, overridden by `THETA_DIM_MAX_ORDER` when set.
    pub fn from_env() -> Result<Limits> {
        match std::env::var(MAX_ORDER_ENV) {
            Ok(v) => {
                let n: usize = v.trim().parse().map_err(|_| {
                    Error::Unsupported(format!(
                        "{MAX_ORDER_ENV} must be a non-negative integer, got '{v}'"
                    ))
                })?;
                Ok(Limits::default().with_max_order(n))
            }
            Err(_) => Ok(Limits::default()),
        }
    }
}

/// Number of conjugacy classes of a spherical group, from its normal form.
pub fn closed_num_classes(spec: &SphericalSpec) -> u64 {
    match *spec {
        SphericalSpec::Cyclic { n } => n,
        SphericalSpec::BinaryDihedral { m, p } => m * (p + 3),
        SphericalSpec::DPrime { m, k, p } => m * (1u64 << k) * (p + 3),
        SphericalSpec::TStar { m } => 7 * m,
        SphericalSpec::TPrime { m, k } => 7 * m * 3u64.pow(k - 1),
        SphericalSpec::OStar { m } => 8 * m,
        SphericalSpec::IStar { m } => 9 * m,
    }
}

/// A built group with its classes, shared by the brute-force routes.
pub struct Prepared {
    pub expr: GroupExpr,
    pub group: FiniteGroup,
    pub classes: ClassData,
}

impl Prepared {
    pub fn new(expr: &GroupExpr, limits: &Limits) -> Result<Prepared> {
        let group = expr.build(limits.family_max_entries, limits.product_max_entries)?;
        let classes = compute_classes(&group)?;
        Ok(Prepared {
            expr: expr.clone(),
            group,
            classes,
        })
    }

    fn z2(&self) -> BigInt {
        BigInt::from(self.classes.z2_orbit_count())
    }

    fn report(
        &self,
        method: Method,
        d1: Option<BigRational>,
        d2: Option<BigRational>,
        dim: BigInt,
        start: Instant,
    ) -> DimensionReport {
        let z2 = self.z2();
        DimensionReport {
            group: self.expr.to_string(),
            order: self.group.order() as u64,
            num_classes: self.classes.num_classes() as u64,
            d1,
            d2,
            dim_ker_eps: &dim - &z2,
            dim_cpi: dim,
            dim_classhat_z2: z2,
            method,
            millis: start.elapsed().as_millis(),
        }
    }
}

fn half_sum(d1: &BigRational, d2: &BigRational, what: &str) -> Result<BigInt> {
    let v = (d1 + d2) / BigInt::from(2);
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::Inconsistent(format!(
            "{what}: (d1 + d2)/2 = {v} is not an integer"
        )))
    }
}

pub fn compute_closed(expr: &GroupExpr) -> Result<DimensionReport> {
    let start = Instant::now();
    let check = closed_forms::validate_spherical(expr);
    let Some(spec) = check.spec else {
        return Err(Error::Unsupported(format!(
            "{expr} is not a spherical 3-manifold group: {}",
            check.diagnostics.join("; ")
        )));
    };
    let (dim, ker) = closed_forms::closed_dims(&spec)?;
    Ok(DimensionReport {
        group: expr.to_string(),
        order: spec.order(),
        num_classes: closed_num_classes(&spec),
        d1: None,
        d2: None,
        dim_classhat_z2: &dim - &ker,
        dim_cpi: dim,
        dim_ker_eps: ker,
        method: Method::Closed,
        millis: start.elapsed().as_millis(),
    })
}

pub fn compute_chars(p: &Prepared) -> Result<DimensionReport> {
    let start = Instant::now();
    let t = characters::character_table(&p.expr, &p.group, &p.classes)?;
    let d1 = p.classes.d1_class_formula();
    let d2 = characters::d2_char_formula(&t, &p.classes)?;
    let dim = half_sum(&d1, &d2, "chars")?;
    Ok(p.report(Method::Chars, Some(d1), Some(d2), dim, start))
}

pub fn compute_burnside(p: &Prepared, limits: &Limits) -> Result<DimensionReport> {
    let start = Instant::now();
    let mode = if p.group.order() <= NAIVE_BURNSIDE_MAX_ORDER {
        BurnsideMode::Naive
    } else {
        log::info!(
            "order {} > {NAIVE_BURNSIDE_MAX_ORDER}: class-reduced Burnside sums",
            p.group.order()
        );
        BurnsideMode::ClassReduced
    };
    let b = burnside::burnside_dims(&p.group, &p.classes, mode, limits.burnside_max_order)?;
    let dim = half_sum(&b.d1, &b.d2, "burnside")?;
    Ok(p.report(Method::Burnside, Some(b.d1), Some(b.d2), dim, start))
}

pub fn compute_orbits(p: &Prepared, limits: &Limits) -> Result<DimensionReport> {
    let start = Instant::now();
    let dim = burnside::orbit_count_dims(&p.group, limits.orbit_max_order)?;
    let d1 = BigInt::from(burnside::orbit_count(
        &p.group,
        false,
        limits.orbit_max_order,
    )?);
    let d2 = BigInt::from(2) * &dim - &d1;
    Ok(p.report(
        Method::Orbits,
        Some(BigRational::from_integer(d1)),
        Some(BigRational::from_integer(d2)),
        dim,
        start,
    ))
}

pub fn compute_diagrams(p: &Prepared, limits: &Limits) -> Result<DimensionReport> {
    let start = Instant::now();
    let dim = BigInt::from(diagrams::count_diagrams(
        &p.group,
        limits.diagram_max_order,
    )?);
    Ok(p.report(Method::Diagrams, None, None, dim, start))
}

/// Run one route. `None` picks closed forms for spherical groups and the
/// character route otherwise.
/// Closed form for spherical expressions, otherwise Burnside while the group
/// fits its budget and the character route beyond that.
pub fn auto_method(expr: &GroupExpr, limits: &Limits) -> Method {
    if closed_forms::validate_spherical(expr).is_spherical() {
        Method::Closed
    } else if expr
        .order()
        .is_some_and(|n| n <= limits.burnside_max_order as u64)
    {
        Method::Burnside
    } else {
        Method::Chars
    }
}

pub fn compute(
    expr: &GroupExpr,
    method: Option<Method>,
    limits: &Limits,
) -> Result<DimensionReport> {
    expr.validate()?;
    let method = method.unwrap_or_else(|| auto_method(expr, limits));
    if method == Method::Closed {
        return compute_closed(expr);
    }
    let order = expr.order().unwrap_or(u64::MAX);
    let budget = match method {
        Method::Burnside => Some(limits.burnside_max_order),
        Method::Orbits => Some(limits.orbit_max_order),
        Method::Diagrams => Some(limits.diagram_max_order),
        _ => None,
    };
    if let Some(b) = budget {
        if order > b as u64 {
            return Err(Error::resource(
                format!("{method} group order"),
                order,
                b as u64,
            ));
        }
    }
    let p = Prepared::new(expr, limits)?;
    match method {
        Method::Chars => compute_chars(&p),
        Method::Burnside => compute_burnside(&p, limits),
        Method::Orbits => compute_orbits(&p, limits),
        Method::Diagrams => compute_diagrams(&p, limits),
        Method::Closed => unreachable!(),
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub reports: Vec<DimensionReport>,
    /// Routes that were not run, with the reason.
    pub skipped: Vec<(Method, String)>,
    pub mismatches: Vec<String>,
}

impl Verification {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty() && self.reports.len() >= 2
    }
}

/// Run every applicable route and compare dim ℂπ, dim Ker ε, and d₁, d₂
/// wherever two routes both produce them.
pub fn verify(expr: &GroupExpr, limits: &Limits) -> Result<Verification> {
    expr.validate()?;
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    match compute_closed(expr) {
        Ok(r) => reports.push(r),
        Err(e) => skipped.push((Method::Closed, e.to_string())),
    }
    match Prepared::new(expr, limits) {
        Ok(p) => {
            let runs: [(Method, &dyn Fn() -> Result<DimensionReport>); 4] = [
                (Method::Chars, &|| compute_chars(&p)),
                (Method::Burnside, &|| compute_burnside(&p, limits)),
                (Method::Orbits, &|| compute_orbits(&p, limits)),
                (Method::Diagrams, &|| compute_diagrams(&p, limits)),
            ];
            for (m, run) in runs {
                match run() {
                    Ok(r) => reports.push(r),
                    Err(e @ Error::Inconsistent(_)) => return Err(e),
                    Err(e) => skipped.push((m, e.to_string())),
                }
            }
        }
        Err(e) => {
            for m in [
                Method::Chars,
                Method::Burnside,
                Method::Orbits,
                Method::Diagrams,
            ] {
                skipped.push((m, e.to_string()));
            }
        }
    }
    let mut mismatches = Vec::new();
    if let Some(first) = reports.first() {
        for r in &reports[1..] {
            let fields = [
                ("dim_Cpi", first.dim_cpi.to_string(), r.dim_cpi.to_string()),
                (
                    "dim_ker_eps",
                    first.dim_ker_eps.to_string(),
                    r.dim_ker_eps.to_string(),
                ),
                (
                    "num_classes",
                    first.num_classes.to_string(),
                    r.num_classes.to_string(),
                ),
                ("order", first.order.to_string(), r.order.to_string()),
            ];
            for (name, a, b) in fields {
                if a != b {
                    mismatches.push(format!("{name}: {}={a} but {}={b}", first.method, r.method));
                }
            }
        }
        let with_d: Vec<&DimensionReport> = reports.iter().filter(|r| r.d1.is_some()).collect();
        for r in with_d.iter().skip(1) {
            if r.d1 != with_d[0].d1 || r.d2 != with_d[0].d2 {
                mismatches.push(format!(
                    "(d1,d2): {} and {} disagree",
                    with_d[0].method, r.method
                ));
            }
        }
    }
    Ok(Verification {
        reports,
        skipped,
        mismatches,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// D*_{4p}, p = 1..
    D4p,
    /// T'_{8·3^k}, k = 1..
    T83k,
    /// Z_n, n = 1..
    Zn,
}

impl TableKind {
    pub fn family(&self, param: u64) -> Family {
        match self {
            TableKind::D4p => Family::BinaryDihedral { p: param },
            TableKind::T83k => Family::TPrime { k: param as u32 },
            TableKind::Zn => Family::Cyclic { n: param },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub param: u64,
    pub dim_cpi: BigInt,
    pub dim_ker_eps: BigInt,
    /// `closed+burnside` when both routes ran and agree, `closed` when the
    /// brute-force route was over budget.
    pub method: String,
}

/// One row per parameter 1..=max. Closed forms always; Burnside as well
/// when the group fits the budget, and the two must agree.
pub fn family_table_rows(
    kind: TableKind,
    max: u64,
    with_burnside: bool,
    limits: &Limits,
) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for param in 1..=max {
        let expr = GroupExpr::atom(kind.family(param));
        let closed = compute_closed(&expr)?;
        let order = expr.order().unwrap_or(u64::MAX);
        let mut method = "closed".to_string();
        let fits = order <= limits.burnside_max_order as u64
            && order.saturating_mul(order) <= limits.family_max_entries;
        if with_burnside && fits {
            let p = Prepared::new(&expr, limits)?;
            let b = compute_burnside(&p, limits)?;
            if b.dim_cpi != closed.dim_cpi || b.dim_ker_eps != closed.dim_ker_eps {
                return Err(Error::Mismatch(format!(
                    "{expr}: closed ({}, {}) vs burnside ({}, {})",
                    closed.dim_cpi, closed.dim_ker_eps, b.dim_cpi, b.dim_ker_eps
                )));
            }
            method = "closed+burnside".into();
        }
        rows.push(TableRow {
            param,
            dim_cpi: closed.dim_cpi,
            dim_ker_eps: closed.dim_ker_eps,
            method,
        });
    }
    Ok(rows)
}
