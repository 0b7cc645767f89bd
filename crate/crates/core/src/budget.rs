//! Feasibility caps for the exhaustive searches.
//!
//! Every exact solver in this crate is exponential. Each one checks its
//! input against a cap here and fails with
//! [`Error::FeasibilityCapExceeded`] instead of running unbounded or
//! returning a truncated answer.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Environment variable holding a global wall-clock cap in milliseconds.
pub const BUDGET_ENV: &str = "SCRAMBLE_LAB_BUDGET_MS";

#[derive(Debug, Clone)]
pub struct Budget {
    /// Vertex cap for subset searches (alpha_k, lambda_k, xi_k).
    pub subset_vertices: usize,
    /// Maximum number of vertex sets an enumeration may produce.
    pub enumerated_sets: usize,
    /// Search-node cap for the hitting-set branch and bound.
    pub hitting_nodes: u64,
    pub treewidth_vertices: usize,
    pub screewidth_vertices: usize,
    pub vcon_vertices: usize,
    pub dsn_vertices: usize,
    pub carton_vertices: usize,
    /// Highest divisor degree tried by the gonality search.
    pub gonality_degree: u64,
    /// Maximum number of divisors the gonality search may test.
    pub gonality_divisors: u64,
    /// Largest k used for uniform scrambles in the lower-bound catalog.
    pub uniform_k: usize,
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            subset_vertices: 20,
            enumerated_sets: 200_000,
            hitting_nodes: 20_000_000,
            treewidth_vertices: 18,
            screewidth_vertices: 10,
            vcon_vertices: 7,
            dsn_vertices: 12,
            carton_vertices: 6,
            gonality_degree: 6,
            gonality_divisors: 2_000_000,
            uniform_k: 5,
            deadline: None,
        }
    }
}

impl Budget {
    /// Default caps, with the deadline taken from [`BUDGET_ENV`] if set.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(ms) = std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse::<u64>().ok()) {
            b.deadline = Some(Instant::now() + Duration::from_millis(ms));
        }
        b
    }

    pub fn with_deadline(mut self, d: Duration) -> Self {
        self.deadline = Some(Instant::now() + d);
        self
    }

    pub fn check_vertices(&self, what: &'static str, n: usize, cap: usize) -> Result<()> {
        if n > cap {
            return Err(Error::FeasibilityCapExceeded {
                what,
                detail: format!("{n} vertices, cap {cap}"),
            });
        }
        Ok(())
    }

    pub fn check_deadline(&self, what: &'static str) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::FeasibilityCapExceeded {
                what,
                detail: "time budget exhausted".into(),
            }),
            _ => Ok(()),
        }
    }
}
