//! Conjugacy classes, power maps and the class-sum formulas built on them.

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Conjugacy classes of a [`FiniteGroup`].
///
/// Classes are numbered by their smallest element index, so class 0 is the
/// identity class and the representative of each class is its smallest
/// element.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub group_order: usize,
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub inverse: Vec<usize>,
    pub square: Vec<usize>,
    pub cube: Vec<usize>,
    pub element_order: Vec<u64>,
}

impl ClassData {
    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn centralizer_size(&self, c: usize) -> usize {
        self.group_order / self.sizes[c]
    }

    /// Number of orbits of inversion on the classes. This is
    /// dim ℂπ − dim Ker ε.
    pub fn z2_orbit_count(&self) -> usize {
        let fixed = (0..self.num_classes())
            .filter(|&c| self.inverse[c] == c)
            .count();
        fixed + (self.num_classes() - fixed) / 2
    }

    /// Σ over class pairs (i, j) with equal cube class of
    /// |C_i| |C_j| / |C_{cube(i)}| (class sizes).
    pub fn delta3_weighted_sum(&self) -> BigRational {
        let k = self.num_classes();
        let mut by_cube = vec![0usize; k];
        for c in 0..k {
            by_cube[self.cube[c]] += self.sizes[c];
        }
        let mut total = BigRational::zero();
        for (c, &s) in by_cube.iter().enumerate() {
            if s > 0 {
                let s = s as u64;
                total += BigRational::new(BigInt::from(s * s), BigInt::from(self.sizes[c]));
            }
        }
        total
    }

    /// d₁ from class data alone.
    pub fn d1_class_formula(&self) -> BigRational {
        let n = self.group_order as u64;
        let k = self.num_classes();
        let mut total = BigRational::zero();
        for c in 0..k {
            let size = self.sizes[c] as u64;
            total += BigRational::new(BigInt::from(n * n), BigInt::from(size));
            total += BigRational::new(
                BigInt::from(3 * n * size),
                BigInt::from(self.sizes[self.square[c]]),
            );
        }
        total += self.delta3_weighted_sum() * BigInt::from(2);
        total / BigInt::from(6 * n)
    }

    /// r(c) = #{y : y² ∈ c} / |c|, the number of square roots of any element
    /// of class c.
    pub fn sqrt_counts(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut hits = vec![0usize; self.num_classes()];
        for y in 0..g.order() {
            hits[self.class_of[g.mul(y, y)]] += 1;
        }
        hits.iter()
            .zip(&self.sizes)
            .map(|(h, s)| {
                debug_assert_eq!(h % s, 0);
                h / s
            })
            .collect()
    }
}

/// Compute the classes and their inverse, square and cube maps. The power
/// maps are checked on every element of every class.
pub fn compute_classes(g: &FiniteGroup) -> Result<ClassData> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        let mut size = 0;
        for y in 0..n {
            let z = g.mul(g.mul(y, x), g.inv(y));
            if class_of[z] == usize::MAX {
                class_of[z] = c;
                size += 1;
            }
        }
        reps.push(x);
        sizes.push(size);
    }
    let k = reps.len();
    let power_map = |f: &dyn Fn(usize) -> usize, what: &str| -> Result<Vec<usize>> {
        let mut map = vec![usize::MAX; k];
        for x in 0..n {
            let c = class_of[x];
            let t = class_of[f(x)];
            if map[c] == usize::MAX {
                map[c] = t;
            } else if map[c] != t {
                return Err(Error::Inconsistent(format!(
                    "{what} map not a class function on class {c}"
                )));
            }
        }
        Ok(map)
    };
    let inverse = power_map(&|x| g.inv(x), "inverse")?;
    let square = power_map(&|x| g.mul(x, x), "square")?;
    let cube = power_map(&|x| g.mul(g.mul(x, x), x), "cube")?;
    let element_order = reps.iter().map(|&r| g.element_order(r)).collect();
    Ok(ClassData {
        group_order: n,
        class_of,
        reps,
        sizes,
        inverse,
        square,
        cube,
        element_order,
    })
}
