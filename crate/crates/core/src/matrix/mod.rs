//! Square matrices over a semiring and their closure `X* = ⊕_k X^k`.

mod lifted;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

pub use lifted::{ArrivalProfile, Spread};

use crate::algebra::{ClosureDiverged, Count, Element, Generalized, Geodetic, Length, Semiring, StarSemiring};
use crate::exec::Exec;
use crate::first_arrival::StepFun;
use crate::traveling::TravelFun;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error(transparent)]
    Diverged(#[from] ClosureDiverged),
}

/// Row-major `n × n` matrix with one label per row/column.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<E> {
    labels: Vec<String>,
    entries: Vec<E>,
}

impl<E: Element> SquareMatrix<E> {
    pub fn zero(labels: Vec<String>) -> Self {
        let n = labels.len();
        SquareMatrix { labels, entries: vec![E::zero(); n * n] }
    }

    pub fn from_fn(labels: Vec<String>, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let n = labels.len();
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        SquareMatrix { labels, entries }
    }

    /// Panics unless `rows` is square and matches `labels`.
    pub fn from_rows(labels: Vec<String>, rows: Vec<Vec<E>>) -> Self {
        let n = labels.len();
        assert!(rows.len() == n && rows.iter().all(|r| r.len() == n), "not an {n}x{n} matrix");
        SquareMatrix { labels, entries: rows.into_iter().flatten().collect() }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.order() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        let n = self.order();
        self.entries[i * n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        let n = self.order();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn map<F: Element>(&self, f: impl Fn(&E) -> F) -> SquareMatrix<F> {
        SquareMatrix { labels: self.labels.clone(), entries: self.entries.iter().map(f).collect() }
    }

    /// Reorders rows and columns: new index `k` holds old index `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        SquareMatrix::from_fn(labels, |i, j| self.get(perm[i], perm[j]).clone())
    }

    fn check_same_order(&self, other: &Self) -> Result<(), MatrixError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(MatrixError::DimensionMismatch { left: self.order(), right: other.order() })
        }
    }
}

impl<E: Semiring> SquareMatrix<E> {
    /// Units on the diagonal.
    pub fn identity(labels: Vec<String>) -> Self {
        SquareMatrix::from_fn(labels, |i, j| if i == j { E::one() } else { E::zero() })
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same_order(other)?;
        Ok(SquareMatrix {
            labels: self.labels.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn mat_mul(&self, other: &Self, exec: Exec) -> Result<Self, MatrixError> {
        self.check_same_order(other)?;
        let n = self.order();
        let rows = exec.map(n, |i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(E::zero(), |acc, k| {
                        let a = self.get(i, k);
                        if a.is_zero() {
                            acc
                        } else {
                            acc.add(&a.mul(other.get(k, j)))
                        }
                    })
                })
                .collect::<Vec<_>>()
        });
        Ok(SquareMatrix { labels: self.labels.clone(), entries: rows.into_iter().flatten().collect() })
    }

    /// Fixpoint of `Y ← I ⊕ X ⊙ Y` from `Y = I`.
    /// Iterates `Y ← I ⊕ X ⊙ Y` from `Y = I` until it stops changing.
    ///
    /// After `k` rounds `Y` holds the sum over all walks of at most `k` steps.
    /// Needs only left distributivity, so it is a reference for every element
    /// type, including traveling functions.
    pub fn iterative_closure(&self, max_iter: usize, exec: Exec) -> Result<Self, ClosureDiverged> {
        let id = SquareMatrix::identity(self.labels.clone());
        let mut y = id.clone();
        for _ in 0..max_iter {
            let z = id.mat_add(&self.mat_mul(&y, exec).expect("same order")).expect("same order");
            if z == y {
                return Ok(y);
            }
            y = z;
        }
        Err(ClosureDiverged(format!("no fixpoint after {max_iter} rounds")))
    }
}

/// Fletcher/Lehmann elimination: for each pivot `k`,
/// `a_ij ← a_ij ⊕ a_ik ⊙ a_kk* ⊙ a_kj`, then `⊕ I`.
///
/// Correct whenever the elements form a genuine closed semiring. Rows of one
/// pivot step are independent and are processed with `exec`.
pub fn fletcher<E: StarSemiring>(x: &SquareMatrix<E>, exec: Exec) -> Result<SquareMatrix<E>, ClosureDiverged> {
    let n = x.order();
    let mut a = x.entries.clone();
    for k in 0..n {
        let s = if E::ABSORPTIVE { E::one() } else { a[k * n + k].star()? };
        let pivot_row: Vec<E> = a[k * n..(k + 1) * n].to_vec();
        let old = &a;
        let rows = exec.map(n, |i| {
            let row = &old[i * n..(i + 1) * n];
            let aik = &row[k];
            if aik.is_zero() {
                return row.to_vec();
            }
            let f = if E::ABSORPTIVE { aik.clone() } else { aik.mul(&s) };
            row.iter()
                .zip(&pivot_row)
                .map(|(aij, akj)| if akj.is_zero() { aij.clone() } else { aij.add(&f.mul(akj)) })
                .collect::<Vec<_>>()
        });
        a = rows.into_iter().flatten().collect();
    }
    for i in 0..n {
        a[i * n + i] = a[i * n + i].add(&E::one());
    }
    Ok(SquareMatrix { labels: x.labels.clone(), entries: a })
}

/// Element types with a matrix closure. The default is plain [`fletcher`].
pub trait Closure: StarSemiring {
    fn closure(x: &SquareMatrix<Self>, exec: Exec) -> Result<SquareMatrix<Self>, ClosureDiverged> {
        fletcher(x, exec)
    }
}

impl Closure for bool {}
impl Closure for Count {}
impl Closure for Length {}
impl Closure for Geodetic {}
impl Closure for StepFun {}
impl<A: StarSemiring> Closure for Generalized<A> {}

/// Fletcher over the lifted carrier, projected back.
impl<A: StarSemiring> Closure for TravelFun<A> {
    fn closure(x: &SquareMatrix<Self>, exec: Exec) -> Result<SquareMatrix<Self>, ClosureDiverged> {
        let lifted = fletcher(&x.map(ArrivalProfile::lift), exec)?;
        Ok(lifted.map(ArrivalProfile::project))
    }
}

impl<E: Closure> SquareMatrix<E> {
    pub fn closure(&self, exec: Exec) -> Result<Self, ClosureDiverged> {
        E::closure(self, exec)
    }
}

/// `{"row label": {"column label": element, ...}, ...}` in label order.
impl<E: Serialize> Serialize for SquareMatrix<E> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Row<'a, E>(&'a [String], &'a [E]);
        impl<E: Serialize> Serialize for Row<'_, E> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (l, e) in self.0.iter().zip(self.1) {
                    m.serialize_entry(l, e)?;
                }
                m.end()
            }
        }
        let n = self.labels.len();
        let mut m = s.serialize_map(Some(n))?;
        for (i, l) in self.labels.iter().enumerate() {
            m.serialize_entry(l, &Row(&self.labels, &self.entries[i * n..(i + 1) * n]))?;
        }
        m.end()
    }
}
