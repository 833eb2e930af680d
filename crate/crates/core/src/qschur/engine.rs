//! Structure constants of `Q_q(n, r)` computed inside `H^c_r`.
//!
//! `φ_{B★} φ_{A★}` is determined by `z = T_{B★} h'_A`, where
//! `T_{A★} = x_{ro(A)} h'_A`, and writing `z` in the basis `{T_{M★}}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::phi::PhiVector;
use super::solve::solve_combination;
use crate::combinatorics::{BaseMatrix, Composition, SuperMatrix};
use crate::error::{Error, Result};
use crate::hecke_clifford::{h_prime, t_star, HCElem};

/// Caches `T_{M★}` and `h'_{M★}` across products. Safe to share between threads.
#[derive(Default)]
pub struct Engine {
    t_cache: RwLock<HashMap<SuperMatrix, Arc<HCElem>>>,
    h_cache: RwLock<HashMap<SuperMatrix, Arc<HCElem>>>,
}

fn cached(
    cache: &RwLock<HashMap<SuperMatrix, Arc<HCElem>>>,
    m: &SuperMatrix,
    build: impl FnOnce(&SuperMatrix) -> HCElem,
) -> Arc<HCElem> {
    if let Some(e) = cache.read().unwrap().get(m) {
        return e.clone();
    }
    let e = Arc::new(build(m));
    cache.write().unwrap().entry(m.clone()).or_insert(e).clone()
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// A process-wide engine.
    pub fn global() -> &'static Engine {
        static E: OnceLock<Engine> = OnceLock::new();
        E.get_or_init(Engine::new)
    }

    /// `T_{M★}`.
    pub fn t_star(&self, m: &SuperMatrix) -> Arc<HCElem> {
        cached(&self.t_cache, m, t_star)
    }

    /// `h'_{M★} = T_{d_M} c_{M★} Σ_M`.
    pub fn h_prime(&self, m: &SuperMatrix) -> Arc<HCElem> {
        cached(&self.h_cache, m, h_prime)
    }

    /// Write `z ∈ x_λ H ∩ H x_μ` as `Σ γ_M T_{M★}`.
    ///
    /// `T_{M★}` is supported on the double coset `S_λ d_M S_μ`, so each
    /// coset block of `z` is solved separately against the `2^k` super
    /// matrices sharing the base `M`.
    pub fn express(&self, z: &HCElem, lambda: &Composition, mu: &Composition) -> Result<PhiVector> {
        if lambda.size() != z.rank() || mu.size() != z.rank() || lambda.len() != mu.len() {
            return Err(Error::Domain("compositions do not match the element".into()));
        }
        let mut blocks: BTreeMap<BaseMatrix, HCElem> = BTreeMap::new();
        for (w, m, f) in z.terms() {
            let base = BaseMatrix::from_double_coset(lambda, w, mu);
            blocks
                .entry(base)
                .or_insert_with(|| HCElem::zero(z.rank()))
                .add_term(*w, m, f.clone());
        }
        let mut out = PhiVector::zero();
        for (base, part) in blocks {
            let cands = SuperMatrix::with_base(&base);
            let elems: Vec<Arc<HCElem>> = cands.iter().map(|m| self.t_star(m)).collect();
            let cols: Vec<&HCElem> = elems.iter().map(|e| e.as_ref()).collect();
            let gamma = solve_combination(&cols, &part)
                .map_err(|e| Error::Solve(format!("block {base:?}: {e}")))?;
            for (m, g) in cands.into_iter().zip(gamma) {
                out.add(m, g);
            }
        }
        Ok(out)
    }

    /// `φ_{B★} φ_{A★}`.
    pub fn product(&self, b: &SuperMatrix, a: &SuperMatrix) -> Result<PhiVector> {
        if b.n() != a.n() {
            return Err(Error::Domain(format!("matrix sizes {} and {} differ", b.n(), a.n())));
        }
        if b.size() != a.size() {
            return Err(Error::RankMismatch(b.size(), a.size()));
        }
        if b.co() != a.ro() {
            return Ok(PhiVector::zero());
        }
        let z = self.t_star(b).mul(&self.h_prime(a));
        self.express(&z, &b.ro(), &a.co())
    }

    /// Bilinear extension of [`Engine::product`].
    pub fn product_vec(&self, x: &PhiVector, y: &PhiVector) -> Result<PhiVector> {
        let mut out = PhiVector::zero();
        for (b, f) in x.terms() {
            for (a, g) in y.terms() {
                out.add_scaled(&self.product(b, a)?, &(f * g));
            }
        }
        Ok(out)
    }

    pub fn cached_elements(&self) -> usize {
        self.t_cache.read().unwrap().len()
    }
}
