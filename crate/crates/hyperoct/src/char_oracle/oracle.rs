//! The oracle driver: per-pair prime selection, memoised character tables,
//! and the user-facing multiplicity / Gelfand entry points.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_integer::lcm;

use crate::char_oracle::cache::DiskCache;
use crate::char_oracle::classes::ConjClasses;
use crate::char_oracle::dixon::{self, CharTable};
use crate::char_oracle::mults;
use crate::groups::perm::PermGroup;
use crate::Result;

pub use crate::char_oracle::mults::{MultiplicityWitness, PairVerdict};

/// Default ceiling for the ascending prime scan.
pub const DEFAULT_PRIME_SEARCH_BOUND: u64 = 1 << 40;

/// Brute-force character-theoretic ground truth. Tables are memoised in
/// memory keyed by (element-set digest, prime) and optionally persisted on
/// disk in the same keying.
pub struct Oracle {
    disk: Option<DiskCache>,
    prime_search_bound: u64,
    tables: Mutex<HashMap<(String, u64), Arc<CharTable>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(None)
    }
}

impl Oracle {
    pub fn new(disk: Option<DiskCache>) -> Oracle {
        Oracle {
            disk,
            prime_search_bound: DEFAULT_PRIME_SEARCH_BOUND,
            tables: Mutex::new(HashMap::new()),
        }
    }

    /// Caps the ascending prime scan; exceeding it is a resource error.
    pub fn with_prime_search_bound(mut self, bound: u64) -> Oracle {
        self.prime_search_bound = bound;
        self
    }

    /// The prime shared by a `(G, K)` computation: smallest
    /// `p ≡ 1 (mod lcm(exp G, exp K))` with `p > 2|G|`.
    pub fn pair_prime(&self, g: &PermGroup, k: &PermGroup) -> Result<u64> {
        dixon::select_prime(
            lcm(g.exponent(), k.exponent()),
            g.order(),
            self.prime_search_bound,
        )
    }

    /// The prime for a standalone table of `g`.
    pub fn group_prime(&self, g: &PermGroup) -> Result<u64> {
        dixon::select_prime(g.exponent(), g.order(), self.prime_search_bound)
    }

    /// Character table of `g` at its own prime.
    pub fn character_table(&self, g: &PermGroup) -> Result<Arc<CharTable>> {
        let p = self.group_prime(g)?;
        self.character_table_at(g, p)
    }

    /// Character table of `g` at a caller-fixed prime (used to put a
    /// subgroup and its ambient group over one field).
    pub fn character_table_at(&self, g: &PermGroup, prime: u64) -> Result<Arc<CharTable>> {
        let digest = g.fingerprint_digest();
        let key = (digest.clone(), prime);
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(Arc::clone(t));
        }
        let classes = ConjClasses::compute(g);
        let table = if let Some(hit) = self
            .disk
            .as_ref()
            .and_then(|d| d.load(&digest, prime, g, &classes))
        {
            hit
        } else {
            let computed = dixon::character_table_with_classes(g, classes, prime)?;
            if let Some(d) = &self.disk {
                d.store(&digest, &computed)?;
            }
            computed
        };
        let arc = Arc::new(table);
        self.tables
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&arc));
        Ok(arc)
    }

    /// Tables of an ambient group and a subgroup over their shared prime,
    /// plus the fusion map.
    pub fn pair_tables(
        &self,
        g: &PermGroup,
        k: &PermGroup,
    ) -> Result<(Arc<CharTable>, Arc<CharTable>, Vec<usize>)> {
        let p = self.pair_prime(g, k)?;
        let gt = self.character_table_at(g, p)?;
        let kt = self.character_table_at(k, p)?;
        let fusion = mults::fusion_map(k, &kt, g, &gt)?;
        Ok((gt, kt, fusion))
    }

    pub fn restriction_mult(
        &self,
        g: &PermGroup,
        k: &PermGroup,
        chi: usize,
        psi: usize,
    ) -> Result<u64> {
        let (gt, kt, fusion) = self.pair_tables(g, k)?;
        mults::restriction_mult(&gt, &kt, &fusion, chi, psi)
    }

    pub fn is_strong_gelfand(&self, g: &PermGroup, k: &PermGroup) -> Result<PairVerdict> {
        let (gt, kt, fusion) = self.pair_tables(g, k)?;
        mults::is_strong_gelfand(&gt, &kt, &fusion)
    }

    pub fn is_gelfand(&self, g: &PermGroup, k: &PermGroup) -> Result<PairVerdict> {
        let (gt, kt, fusion) = self.pair_tables(g, k)?;
        mults::is_gelfand(&gt, &kt, &fusion)
    }
}
