//! Todd–Coxeter enumeration (HLT strategy) of the cosets of the trivial
//! subgroup, producing the regular representation as a [`FiniteGroup`].

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::word::{Letter, Presentation};

/// Fallback coset limit when the expected order is unknown.
pub const FALLBACK_MAX_COSETS: usize = 100_000;

/// Twenty times the expected order, or [`FALLBACK_MAX_COSETS`].
pub fn default_max_cosets(expected_order: Option<u64>) -> usize {
    match expected_order {
        Some(n) => n.saturating_mul(20).min(usize::MAX as u64) as usize,
        None => FALLBACK_MAX_COSETS,
    }
}

const UNDEF: usize = usize::MAX;

struct Table {
    cols: usize,
    rows: Vec<usize>,
    parent: Vec<usize>,
    max_cosets: usize,
    queue: VecDeque<usize>,
}

#[inline]
fn col(l: Letter) -> usize {
    2 * l.gen + l.inv as usize
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Table {
    fn new(ngens: usize, max_cosets: usize) -> Table {
        let cols = 2 * ngens;
        Table {
            cols,
            rows: vec![UNDEF; cols],
            parent: vec![0],
            max_cosets,
            queue: VecDeque::new(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> usize {
        self.rows[c * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.rows[c * self.cols + x] = d;
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        let d = self.len();
        if d >= self.max_cosets {
            return Err(Error::resource(
                "coset enumeration",
                d as u64 + 1,
                self.max_cosets as u64,
            ));
        }
        self.parent.push(d);
        self.rows.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(g) = self.queue.pop_front() {
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                self.set(d, inv_col(x), UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.get(mu, x) != UNDEF {
                    let t = self.get(mu, x);
                    self.merge(nu, t);
                } else if self.get(nu, inv_col(x)) != UNDEF {
                    let t = self.get(nu, inv_col(x));
                    self.merge(mu, t);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, inv_col(x), mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[Letter]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len();
        loop {
            while i < j && self.get(f, col(w[i])) != UNDEF {
                f = self.get(f, col(w[i]));
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, inv_col(col(w[j - 1]))) != UNDEF {
                b = self.get(b, inv_col(col(w[j - 1])));
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = col(w[i]);
                self.set(f, x, b);
                self.set(b, inv_col(x), f);
                return Ok(());
            }
            self.define(f, col(w[i]))?;
        }
    }
}

/// Enumerate the group defined by `pres`. The result numbers elements in
/// breadth-first order from the identity (generators tried in order, then
/// their inverses), so it is deterministic; labels are the shortest words.
pub fn enumerate(pres: &Presentation, max_cosets: usize) -> Result<FiniteGroup> {
    let ngens = pres.generators.len();
    let mut t = Table::new(ngens, max_cosets.max(1));
    let mut c = 0;
    while c < t.len() {
        for r in &pres.relators {
            if !t.alive(c) {
                break;
            }
            t.scan_and_fill(c, r)?;
        }
        if t.alive(c) {
            for x in 0..t.cols {
                if t.get(c, x) == UNDEF {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    log::debug!("coset enumeration: {} cosets defined", t.len());
    standardize(&mut t, pres)
}

fn standardize(t: &mut Table, pres: &Presentation) -> Result<FiniteGroup> {
    let cols = t.cols;
    // BFS from coset 0 over live cosets
    let mut order_of = vec![UNDEF; t.len()];
    let mut seq = vec![0usize];
    let mut parent: Vec<(usize, usize)> = vec![(UNDEF, UNDEF)];
    order_of[0] = 0;
    let mut head = 0;
    let bfs_cols: Vec<usize> = (0..cols / 2)
        .map(|g| 2 * g)
        .chain((0..cols / 2).map(|g| 2 * g + 1))
        .collect();
    while head < seq.len() {
        let c = seq[head];
        for &x in &bfs_cols {
            let d = t.get(c, x);
            if d == UNDEF {
                return Err(Error::Inconsistent("incomplete coset table".into()));
            }
            let d = t.rep(d);
            if order_of[d] == UNDEF {
                order_of[d] = seq.len();
                seq.push(d);
                parent.push((head, x));
            }
        }
        head += 1;
    }
    let n = seq.len();
    // action[i][x] = element index reached from element i by column x
    let mut action = vec![0usize; n * cols];
    for (i, &c) in seq.iter().enumerate() {
        for x in 0..cols {
            let d = t.get(c, x);
            let d = t.rep(d);
            action[i * cols + x] = order_of[d];
        }
    }
    for x in 0..cols {
        let mut hit = vec![false; n];
        for i in 0..n {
            hit[action[i * cols + x]] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::Inconsistent(
                "coset column is not a permutation".into(),
            ));
        }
    }
    // mul[i][j] = i * w_j, computed along the BFS tree of j
    let mut mul = vec![0u32; n * n];
    let mut tmp = vec![0usize; n];
    for j in 0..n {
        if j == 0 {
            for (i, v) in tmp.iter_mut().enumerate() {
                *v = i;
            }
        } else {
            let (pj, x) = parent[j];
            for (i, v) in tmp.iter_mut().enumerate() {
                let via = mul[i * n + pj] as usize;
                *v = action[via * cols + x];
            }
        }
        for i in 0..n {
            mul[i * n + j] = tmp[i] as u32;
        }
    }
    let mut labels = vec![String::new(); n];
    labels[0] = "1".into();
    for j in 1..n {
        let (pj, x) = parent[j];
        let g = pres.generators[x / 2];
        let letter = if x % 2 == 0 {
            g.to_string()
        } else {
            format!("{g}^-1")
        };
        labels[j] = if pj == 0 {
            letter
        } else {
            format!("{}*{}", labels[pj], letter)
        };
    }
    let gens = (0..cols / 2).map(|g| action[2 * g]).collect();
    let name = format!("<{} gens, {} relators>", cols / 2, pres.relators.len());
    FiniteGroup::from_table(name, n, mul, gens, pres.generators.clone(), labels)
}
