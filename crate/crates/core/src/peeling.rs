//! Peeling: λ values by repeated minimum-K_s-degree extraction.

use crate::bucket::BucketQueue;
use crate::clique::{CliqueIndex, KrId};

/// λ_s value of every K_r of a [`CliqueIndex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaTable {
    lambda: Vec<u32>,
    max_lambda: u32,
}

impl LambdaTable {
    pub fn new(lambda: Vec<u32>) -> Self {
        let max_lambda = lambda.iter().copied().max().unwrap_or(0);
        LambdaTable { lambda, max_lambda }
    }

    #[inline]
    pub fn get(&self, u: KrId) -> u32 {
        self.lambda[u]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.lambda
    }

    pub fn max_lambda(&self) -> u32 {
        self.max_lambda
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// K_r ids grouped by λ, ascending within each level.
    pub fn levels(&self) -> Vec<Vec<KrId>> {
        let mut levels = vec![Vec::new(); self.max_lambda as usize + 1];
        for (u, &l) in self.lambda.iter().enumerate() {
            levels[l as usize].push(u);
        }
        levels
    }

    /// λ_{r,s}(C): the smallest λ among the K_rs of a K_s.
    #[inline]
    pub fn lambda_rs(&self, clique: &[KrId]) -> u32 {
        lambda_rs(clique, self)
    }
}

/// Smallest λ over the constituent K_rs of a K_s.
#[inline]
pub fn lambda_rs(clique: &[KrId], table: &LambdaTable) -> u32 {
    clique.iter().map(|&u| table.get(u)).min().unwrap_or(0)
}

/// Computes λ for every K_r in `idx`.
pub fn set_lambda(idx: &CliqueIndex) -> LambdaTable {
    set_lambda_with_order(idx).0
}

/// Like [`set_lambda`], also returning the extraction order.
///
/// Among K_rs of equal minimum K_s-degree the lowest id is extracted first.
pub fn set_lambda_with_order(idx: &CliqueIndex) -> (LambdaTable, Vec<KrId>) {
    let n = idx.len();
    let mut queue = BucketQueue::with_keys(&idx.s_degrees());
    let mut lambda = vec![0u32; n];
    let mut processed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut buf = Vec::new();
    let s = idx.rs().s();

    while let Some((u, omega_u)) = queue.pop_min() {
        lambda[u] = omega_u;
        idx.collect_s_cliques(u, &mut buf);
        for clique in buf.chunks_exact(s) {
            let others = &clique[1..];
            if others.iter().any(|&v| processed[v]) {
                continue;
            }
            for &v in others {
                if queue.key(v) > omega_u {
                    queue.decrement(v);
                }
            }
        }
        processed[u] = true;
        order.push(u);
    }
    (LambdaTable::new(lambda), order)
}
