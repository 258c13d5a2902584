//! Supercharacter theories of Z/nZ induced by subgroups of its unit group.
//!
//! A subgroup Γ of (Z/nZ)^× acts on Z/nZ by multiplication.  Its orbits
//! X_0, X_1, ... (indexed by ascending least element, so X_0 = {0}) are the
//! superclasses, and the supercharacters are the orbit sums
//! σ_i(y) = Σ_{x in X_i} ζ^{x y} with ζ = exp(-2πi/n).  The table of values
//! σ_i(X_j), the counts c_{ijk} of solutions to x + y = z with (x, y) in
//! X_i × X_j and z in X_k, and the unitary matrix built from the table are
//! everything downstream algebra constructions need.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use num_complex::Complex64;
use num_integer::gcd;
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::TAU;

/// Reduces an integer into `[0, n)`.
pub fn reduce(x: i64, n: u64) -> u64 {
    let n = n as i64;
    (((x % n) + n) % n) as u64
}

/// `min(x mod n, n - x mod n)`: the orbit representative of `x` under negation.
pub fn fold(x: i64, n: u64) -> usize {
    let r = reduce(x, n);
    r.min(n - r) as usize
}

/// `ζ^power` for `ζ = exp(-2πi/n)`, with the exponent reduced mod n first so
/// the angle never leaves `(-2π, 0]`.
pub fn zeta(n: u64, power: i64) -> Complex64 {
    let m = reduce(power, n);
    Complex64::from_polar(1.0, -TAU * m as f64 / n as f64)
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn multiplicative_closure(n: u64, seed: &[u64]) -> Vec<u64> {
    let identity = 1 % n;
    let mut set: BTreeSet<u64> = BTreeSet::new();
    set.insert(identity);
    let mut work: Vec<u64> = vec![identity];
    while let Some(x) = work.pop() {
        for &g in seed {
            let y = mul_mod(x, g, n);
            if set.insert(y) {
                work.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// A subgroup of the unit group (Z/nZ)^×, stored as its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSubgroup {
    n: u64,
    generators: Vec<u64>,
    elements: Vec<u64>,
}

impl UnitSubgroup {
    /// Closes `generators` under multiplication mod n.  Every generator must
    /// be a unit, otherwise the closure would escape the unit group.
    pub fn new(n: u64, generators: &[u64]) -> Result<Self> {
        assert!(n >= 1, "modulus must be positive");
        let mut normalized = Vec::with_capacity(generators.len());
        for &g in generators {
            let g = g % n;
            if gcd(g, n) != 1 {
                return Err(Error::NonUnitGenerator { n, generator: g });
            }
            normalized.push(g);
        }
        let elements = multiplicative_closure(n, &normalized);
        Ok(UnitSubgroup {
            n,
            generators: normalized,
            elements,
        })
    }

    /// The trivial subgroup {1}.
    pub fn trivial(n: u64) -> Self {
        UnitSubgroup::new(n, &[]).expect("no generators to reject")
    }

    /// The subgroup {±1} generated by n - 1.
    pub fn pm_one(n: u64) -> Self {
        if n <= 2 {
            return UnitSubgroup::trivial(n);
        }
        UnitSubgroup::new(n, &[n - 1]).expect("-1 is always a unit")
    }

    /// The full unit group.
    pub fn full(n: u64) -> Self {
        let units: Vec<u64> = (0..n.max(1)).filter(|&x| gcd(x, n) == 1).collect();
        UnitSubgroup::new(n, &units).expect("units are units")
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Sorted elements of the subgroup.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&(x % self.n)).is_ok()
    }
}

/// Every subgroup of (Z/nZ)^×, found by closing the subgroup lattice: start
/// from the trivial subgroup and repeatedly adjoin single units until no new
/// subgroup appears.  Sorted by order, then by element list.
pub fn enumerate_subgroups(n: u64) -> Vec<UnitSubgroup> {
    let units: Vec<u64> = (0..n.max(1)).filter(|&x| gcd(x, n) == 1).collect();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut work = vec![multiplicative_closure(n, &[])];
    seen.insert(work[0].clone());
    while let Some(current) = work.pop() {
        for &g in &units {
            if current.binary_search(&g).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(g);
            let extended = multiplicative_closure(n, &seed);
            if seen.insert(extended.clone()) {
                work.push(extended);
            }
        }
    }
    let mut all: Vec<Vec<u64>> = seen.into_iter().collect();
    all.sort_by_key(|s| (s.len(), s.clone()));
    all.iter()
        .map(|elements| UnitSubgroup::new(n, elements).expect("closure elements are units"))
        .collect()
}

/// The orbits of a unit subgroup acting on Z/nZ by multiplication, ordered by
/// ascending least element (so class 0 is always {0}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    n: u64,
    classes: Vec<Vec<u64>>,
    class_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn new(subgroup: &UnitSubgroup) -> Self {
        let n = subgroup.n();
        let mut class_of = vec![usize::MAX; n as usize];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x as usize] != usize::MAX {
                continue;
            }
            let orbit: BTreeSet<u64> = subgroup
                .elements()
                .iter()
                .map(|&g| mul_mod(g, x, n))
                .collect();
            let index = classes.len();
            for &y in &orbit {
                class_of[y as usize] = index;
            }
            classes.push(orbit.into_iter().collect());
        }
        OrbitPartition {
            n,
            classes,
            class_of,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[u64] {
        &self.classes[i]
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    /// The least element of class `i`.
    pub fn representative(&self, i: usize) -> u64 {
        self.classes[i][0]
    }

    /// The class index of the residue `x mod n`.
    pub fn class_of(&self, x: u64) -> usize {
        self.class_of[(x % self.n) as usize]
    }
}

/// The table of supercharacter values σ_i(X_j) = Σ_{x in X_i} ζ^{x y} for any
/// (equivalently, the least) representative y of X_j.
#[derive(Clone, Debug)]
pub struct SupercharacterTable {
    n: u64,
    class_sizes: Vec<usize>,
    values: Matrix<Complex64>,
}

impl SupercharacterTable {
    pub fn new(partition: &OrbitPartition) -> Self {
        let n = partition.n();
        let m = partition.num_classes();
        let values = Matrix::from_fn(m, m, |i, j| {
            let rep = partition.representative(j) as i64;
            partition
                .class(i)
                .iter()
                .map(|&x| zeta(n, x as i64 * rep))
                .sum()
        });
        SupercharacterTable {
            n,
            class_sizes: (0..m).map(|i| partition.class_size(i)).collect(),
            values,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// σ_i evaluated on class j.
    pub fn value(&self, i: usize, j: usize) -> Complex64 {
        self.values[(i, j)]
    }

    pub fn values(&self) -> &Matrix<Complex64> {
        &self.values
    }

    /// The unitary matrix U with entries
    /// `U[i][j] = σ_i(X_j) sqrt(|X_j|) / (sqrt(|X_i|) sqrt(n))`.
    ///
    /// U is symmetric, satisfies U^4 = I, and conjugates every basis matrix
    /// of the associated algebra to a diagonal matrix.
    pub fn unitary_matrix(&self) -> Matrix<Complex64> {
        let root_n = (self.n as f64).sqrt();
        let roots: Vec<f64> = self.class_sizes.iter().map(|&s| (s as f64).sqrt()).collect();
        Matrix::from_fn(self.num_classes(), self.num_classes(), |i, j| {
            self.values[(i, j)] * (roots[j] / (roots[i] * root_n))
        })
    }
}

/// The sparse table of counts c_{ijk} = #{(x, y) in X_i × X_j : x + y = z}
/// for the least representative z of X_k.  The count does not depend on which
/// representative is chosen, which [`StructureConstants::at_representatives`]
/// lets tests confirm directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    n: u64,
    class_sizes: Vec<usize>,
    counts: BTreeMap<(usize, usize, usize), u64>,
}

impl StructureConstants {
    /// Counts against the least representative of every class, walking
    /// `x in X_i, y = z - x` for each class pair.
    pub fn new(partition: &OrbitPartition) -> Self {
        let reps: Vec<u64> = (0..partition.num_classes())
            .map(|k| partition.representative(k))
            .collect();
        StructureConstants::at_representatives(partition, &reps)
    }

    /// Counts against a caller-chosen representative `reps[k]` of each X_k.
    pub fn at_representatives(partition: &OrbitPartition, reps: &[u64]) -> Self {
        assert_eq!(reps.len(), partition.num_classes(), "one rep per class");
        let n = partition.n();
        let mut counts = BTreeMap::new();
        for (k, &z) in reps.iter().enumerate() {
            debug_assert_eq!(partition.class_of(z), k, "rep must lie in its class");
            for i in 0..partition.num_classes() {
                for &x in partition.class(i) {
                    let y = reduce(z as i64 - x as i64, n);
                    let j = partition.class_of(y);
                    *counts.entry((i, j, k)).or_insert(0) += 1;
                }
            }
        }
        StructureConstants {
            n,
            class_sizes: (0..partition.num_classes())
                .map(|i| partition.class_size(i))
                .collect(),
            counts,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.counts.get(&(i, j, k)).copied().unwrap_or(0)
    }

    /// All nonzero counts in key order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        self.counts.iter().map(|(&key, &c)| (key, c))
    }

    /// Nonzero `(k, c_{ijk})` for a fixed pair (i, j).
    pub fn counts_for(&self, i: usize, j: usize) -> Vec<(usize, u64)> {
        self.counts
            .range((i, j, 0)..=(i, j, usize::MAX))
            .map(|(&(_, _, k), &c)| (k, c))
            .collect()
    }

    /// The basis matrix `[T_i]_{j,k} = c_{ijk} sqrt(|X_k|) / sqrt(|X_j|)` of
    /// the algebra diagonalized by the unitary matrix of the same theory:
    /// T_i U = U D_i with D_i = diag(σ_i(X_j)).
    pub fn basis_matrix(&self, i: usize) -> Result<Matrix<f64>> {
        let m = self.num_classes();
        if i >= m {
            return Err(Error::IndexOutOfRange { index: i, limit: m });
        }
        let roots: Vec<f64> = self.class_sizes.iter().map(|&s| (s as f64).sqrt()).collect();
        let mut t = Matrix::zeros(m, m);
        for (&(_, j, k), &c) in self.counts.range((i, 0, 0)..=(i, usize::MAX, usize::MAX)) {
            t[(j, k)] = c as f64 * roots[k] / roots[j];
        }
        Ok(t)
    }
}
