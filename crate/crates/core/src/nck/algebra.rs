use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::{One, Zero};

use super::coproduct::{coproduct, reduced_coproduct, Coproduct};
use super::{DecorationSet, Forest, GradedVector, MultiTensor, NckError, TensorVector, Tree};
use crate::exactla::RationalMatrix;
use crate::ratseries::Rational;

/// Canonical basis of one homogeneous component.
#[derive(Debug)]
pub struct Basis {
    pub degree: usize,
    /// Forests sorted by their text form.
    pub forests: Vec<Forest>,
    /// Single trees of this degree, sorted the same way.
    pub trees: Vec<Tree>,
    index: HashMap<Forest, usize>,
}

impl Basis {
    pub fn dim(&self) -> usize {
        self.forests.len()
    }

    pub fn index_of(&self, f: &Forest) -> Option<usize> {
        self.index.get(f).copied()
    }
}

/// `H_NCK^D` for a fixed decoration set, with a lazily filled basis cache.
#[derive(Debug)]
pub struct NckAlgebra {
    decorations: DecorationSet,
    bases: Mutex<Vec<Arc<Basis>>>,
}

fn sort_by_text<T: ToString>(items: Vec<T>) -> Vec<T> {
    let mut keyed: Vec<(String, T)> = items.into_iter().map(|x| (x.to_string(), x)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, x)| x).collect()
}

impl NckAlgebra {
    pub fn new(decorations: DecorationSet) -> Self {
        NckAlgebra {
            decorations,
            bases: Mutex::new(Vec::new()),
        }
    }

    /// The Catalan case: one decoration of degree 1.
    pub fn catalan() -> Self {
        Self::new(DecorationSet::single())
    }

    pub fn decorations(&self) -> &DecorationSet {
        &self.decorations
    }

    /// The basis of `H_n`, computing and caching degrees up to `n` if needed.
    pub fn basis(&self, n: usize) -> Arc<Basis> {
        let mut cache = self.bases.lock().unwrap_or_else(|e| e.into_inner());
        while cache.len() <= n {
            let next = self.build_basis(cache.len(), &cache);
            cache.push(Arc::new(next));
        }
        Arc::clone(&cache[n])
    }

    fn build_basis(&self, n: usize, lower: &[Arc<Basis>]) -> Basis {
        let mut trees = Vec::new();
        for d in self.decorations.entries() {
            if d.degree <= n {
                for f in &lower[n - d.degree].forests {
                    trees.push(Tree::node(d.label.clone(), f.trees.clone()));
                }
            }
        }
        let trees = sort_by_text(trees);
        let mut forests = Vec::new();
        if n == 0 {
            forests.push(Forest::unit());
        }
        for j in 1..=n {
            let heads: &[Tree] = if j == n { &trees } else { &lower[j].trees };
            for t in heads {
                for rest in &lower[n - j].forests {
                    let mut v = Vec::with_capacity(rest.len() + 1);
                    v.push(t.clone());
                    v.extend(rest.trees.iter().cloned());
                    forests.push(Forest::new(v));
                }
            }
        }
        let forests = sort_by_text(forests);
        let index = forests
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        Basis {
            degree: n,
            forests,
            trees,
            index,
        }
    }

    pub fn enumerate_forests(&self, n: usize) -> Vec<Forest> {
        self.basis(n).forests.clone()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.basis(n).dim()
    }

    pub fn degree(&self, f: &Forest) -> Result<usize, NckError> {
        for t in &f.trees {
            if let Some(bad) = t
                .labels()
                .into_iter()
                .find(|l| self.decorations.degree_of(l).is_none())
            {
                return Err(NckError::UnknownLabel(bad.to_string()));
            }
        }
        Ok(f.weight(&|label: &str| self.decorations.degree_of(label).unwrap_or(0)))
    }

    /// Parses a forest and checks its labels against the decoration set.
    pub fn parse_forest(&self, text: &str) -> Result<Forest, NckError> {
        let f: Forest = text.parse()?;
        self.degree(&f)?;
        Ok(f)
    }

    /// Degree and basis index of `f`.
    pub fn locate(&self, f: &Forest) -> Result<(usize, usize), NckError> {
        let n = self.degree(f)?;
        let i = self
            .basis(n)
            .index_of(f)
            .expect("every forest of degree n is in the basis of H_n");
        Ok((n, i))
    }

    pub fn basis_vector(&self, f: &Forest) -> Result<GradedVector, NckError> {
        let (n, i) = self.locate(f)?;
        let mut v = GradedVector::zero(n, self.dim(n));
        v.coords[i] = Rational::one();
        Ok(v)
    }

    pub fn product(&self, x: &GradedVector, y: &GradedVector) -> GradedVector {
        let (bx, by) = (self.basis(x.degree), self.basis(y.degree));
        let n = x.degree + y.degree;
        let bn = self.basis(n);
        let mut out = GradedVector::zero(n, bn.dim());
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let k = bn
                    .index_of(&bx.forests[i].product(&by.forests[j]))
                    .expect("products stay in the basis");
                out.coords[k] += a * b;
            }
        }
        out
    }

    fn tensor_family(
        &self,
        x: &GradedVector,
        reduced: bool,
    ) -> Result<Vec<TensorVector>, NckError> {
        let n = x.degree;
        if reduced && n == 0 {
            return Err(NckError::DegreeZeroInput);
        }
        let range = if reduced { 1..n } else { 0..n + 1 };
        let mut family: Vec<TensorVector> = range
            .clone()
            .map(|i| TensorVector::zero((i, n - i), (self.dim(i), self.dim(n - i))))
            .collect();
        let offset = range.start;
        let bn = self.basis(n);
        for (k, c) in x.support() {
            let d = self.coproduct_checked(&bn.forests[k], reduced)?;
            for ((l, r), m) in d {
                let (i, a) = self.locate(&l)?;
                let (_, b) = self.locate(&r)?;
                family[i - offset].add_to(a, b, &(c * Rational::from_integer(m.into())));
            }
        }
        Ok(family)
    }

    /// Sparse coproduct of a basis forest, asserting that it is graded.
    fn coproduct_checked(&self, f: &Forest, reduced: bool) -> Result<Coproduct, NckError> {
        let d = if reduced {
            reduced_coproduct(f)?
        } else {
            coproduct(f)
        };
        let n = self.degree(f)?;
        for (l, r) in d.keys() {
            assert_eq!(
                self.degree(l)? + self.degree(r)?,
                n,
                "coproduct must be graded"
            );
        }
        Ok(d)
    }

    /// `Δ(x)` split into bidegrees `(i, n − i)` for `i = 0..=n`.
    pub fn coproduct(&self, x: &GradedVector) -> Vec<TensorVector> {
        self.tensor_family(x, false)
            .expect("full coproduct never fails")
    }

    /// `Δ̃(x)` split into bidegrees `(i, n − i)` for `i = 1..n`.
    pub fn reduced_coproduct(&self, x: &GradedVector) -> Result<Vec<TensorVector>, NckError> {
        self.tensor_family(x, true)
    }

    /// `Δ̃^{(k)}(x)`, of tensor order `k + 1`, obtained by applying `Δ̃` to
    /// the last factor `k` times. `k = 0` returns `x` itself.
    pub fn iterated_reduced(&self, k: usize, x: &GradedVector) -> Result<MultiTensor, NckError> {
        if x.degree == 0 {
            return Err(NckError::DegreeZeroInput);
        }
        let bn = self.basis(x.degree);
        let mut acc = MultiTensor::default();
        for (i, c) in x.support() {
            acc.add_term(vec![bn.forests[i].clone()], c.clone());
        }
        for _ in 0..k {
            let mut next = MultiTensor::default();
            for (key, c) in &acc.terms {
                let (last, init) = key.split_last().expect("keys are nonempty");
                for ((l, r), m) in reduced_coproduct(last)? {
                    let mut nk = init.to_vec();
                    nk.push(l);
                    nk.push(r);
                    next.add_term(nk, c * Rational::from_integer(m.into()));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Matrix of `Δ̃ : H_n → ⊕_{0<i<n} H_i ⊗ H_{n−i}`. Columns follow the
    /// basis of `H_n`; rows run over bidegrees in increasing `i`, then over
    /// basis pairs `(a, b)` in lexicographic order.
    pub fn reduced_coproduct_matrix(&self, n: usize) -> Result<RationalMatrix, NckError> {
        if n == 0 {
            return Err(NckError::DegreeZeroInput);
        }
        let mut offsets = vec![0; n + 1];
        for i in 1..n {
            offsets[i + 1] = offsets[i] + self.dim(i) * self.dim(n - i);
        }
        let rows = offsets[n];
        let bn = self.basis(n);
        let mut m = RationalMatrix::zeros(rows, bn.dim());
        for (col, f) in bn.forests.iter().enumerate() {
            for ((l, r), mult) in self.coproduct_checked(f, true)? {
                let (i, a) = self.locate(&l)?;
                let (j, b) = self.locate(&r)?;
                let row = offsets[i] + a * self.dim(j) + b;
                let prev = m.get(row, col).clone();
                m.set(row, col, prev + Rational::from_integer(mult.into()));
            }
        }
        Ok(m)
    }

    /// Sparse `Δ(f)` with rational coefficients, for callers that want the
    /// forest-level form.
    pub fn coproduct_terms(&self, f: &Forest) -> Vec<(Forest, Forest, Rational)> {
        coproduct(f)
            .into_iter()
            .map(|((l, r), m)| (l, r, Rational::from_integer(m.into())))
            .filter(|(_, _, c)| !c.is_zero())
            .collect()
    }
}

impl Default for NckAlgebra {
    fn default() -> Self {
        Self::catalan()
    }
}
