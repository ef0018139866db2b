//! Generalized Hermite polynomials H_{p,q}.
//!
//! The family is generated by a pair of bilinear recurrences,
//!
//! ```text
//! 2p H_{p+1,q} H_{p-1,q} =  H_{p,q} H_{p,q}'' - (H_{p,q}')^2 + 2p H_{p,q}^2
//! 2q H_{p,q+1} H_{p,q-1} = -H_{p,q} H_{p,q}'' + (H_{p,q}')^2 + 2q H_{p,q}^2
//! ```
//!
//! with H_{0,0} = H_{1,0} = H_{0,1} = 1 and H_{1,1} = 2x, which force
//! H_{p,0} = H_{0,q} = 1. Each step divides exactly; a nonzero remainder
//! would mean a broken invariant upstream and panics loudly.
//!
//! H_{p,q} is proportional to the Wronskian of the q consecutive classical
//! Hermite polynomials H_p, ..., H_{p+q-1}; that independent route is kept
//! as a cross-check oracle, normalized to the recurrence's leading
//! coefficient 2^{pq}.
//!
//! Real zeros follow the parity of the second index: H_{p,q} is nodeless on
//! the real line for even q and has exactly p simple real zeros for odd q.

use crate::exact::poly::rat_i64;
use crate::exact::{classical_hermite, real_root_count as sturm_count, wronskian, Polynomial};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Index pair (p, q) of a generalized Hermite polynomial.
pub type GhKey = (u32, u32);

/// Memoized table of generalized Hermite polynomials, shared by every
/// downstream module. Reads take a shared lock; each value is computed
/// outside any lock and published atomically, so a race can at worst
/// recompute a value, never tear one.
pub struct GhTable {
    entries: RwLock<HashMap<GhKey, Arc<Polynomial>>>,
}

impl GhTable {
    pub fn new() -> Self {
        GhTable {
            entries: RwLock::new(HashMap::new()),
        }
    }

    /// The process-wide table.
    pub fn shared() -> &'static GhTable {
        static TABLE: OnceLock<GhTable> = OnceLock::new();
        TABLE.get_or_init(GhTable::new)
    }

    pub fn get(&self, p: u32, q: u32) -> Arc<Polynomial> {
        if let Some(hit) = self.entries.read().unwrap().get(&(p, q)) {
            return hit.clone();
        }
        let value = Arc::new(self.compute(p, q));
        let mut entries = self.entries.write().unwrap();
        entries.entry((p, q)).or_insert(value).clone()
    }

    /// Fill order: the p = 1 row is raised in q first, then p is raised at
    /// fixed q, so both recurrences get exercised on every rectangle.
    fn compute(&self, p: u32, q: u32) -> Polynomial {
        if p == 0 || q == 0 {
            return Polynomial::one();
        }
        if p == 1 && q == 1 {
            return Polynomial::from_int_coeffs(&[0, 2]);
        }
        if p == 1 {
            // Raise q: solve the q-recurrence at (1, q-1) for H_{1,q}.
            let h = self.get(1, q - 1);
            let below = self.get(1, q - 2);
            let k = rat_i64(2 * (q as i64 - 1));
            let num = &(&(-&(&*h * &h.derivative_n(2))) + &h.derivative().pow(2))
                + &(&*h * &*h).scale(&k);
            num.divexact(&below.scale(&k))
                .expect("generalized Hermite q-recurrence must divide exactly")
        } else {
            // Raise p: solve the p-recurrence at (p-1, q) for H_{p,q}.
            let h = self.get(p - 1, q);
            let below = self.get(p - 2, q);
            let k = rat_i64(2 * (p as i64 - 1));
            let num =
                &(&(&*h * &h.derivative_n(2)) - &h.derivative().pow(2)) + &(&*h * &*h).scale(&k);
            num.divexact(&below.scale(&k))
                .expect("generalized Hermite p-recurrence must divide exactly")
        }
    }
}

impl Default for GhTable {
    fn default() -> Self {
        GhTable::new()
    }
}

/// The generalized Hermite polynomial H_{p,q}, memoized in the shared table.
pub fn gh(p: u32, q: u32) -> Arc<Polynomial> {
    GhTable::shared().get(p, q)
}

/// Independent construction of H_{p,q} through the Wronskian of consecutive
/// classical Hermite polynomials, rescaled so the leading coefficient
/// matches `gh(p, q)`. Used only as an oracle against the recurrence.
pub fn gh_via_wronskian(p: u32, q: u32) -> Polynomial {
    assert!(q >= 1, "the Wronskian route needs at least one factor");
    let fs: Vec<Polynomial> = (p..p + q).map(classical_hermite).collect();
    let w = wronskian(&fs);
    let target = gh(p, q);
    w.scale(&(target.leading() / w.leading()))
}

/// Exact count of distinct real zeros via Sturm sequences.
pub fn real_zero_count(a: &Polynomial) -> usize {
    sturm_count(a)
}
