use crate::exact::ExactInt;
use std::error::Error;
use std::fmt;

/// Hard ceilings on brute-force work; censuses refuse to start rather than
/// run unbounded.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub subspaces: u64,
    pub tuples: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { subspaces: 2_000_000, tuples: 1 << 24 }
    }
}

impl Budget {
    /// QDENSE_BUDGET, when set to an integer, caps both limits at once.
    pub fn from_env() -> Self {
        match std::env::var("QDENSE_BUDGET").ok().and_then(|v| v.parse::<u64>().ok()) {
            Some(limit) => Budget { subspaces: limit, tuples: limit },
            None => Budget::default(),
        }
    }

    pub fn with_override(limit: Option<u64>) -> Self {
        match limit {
            Some(limit) => Budget { subspaces: limit, tuples: limit },
            None => Budget::from_env(),
        }
    }

    pub fn check_subspaces(&self, needed: &ExactInt) -> Result<(), BudgetExceeded> {
        if needed > &ExactInt::from(self.subspaces) {
            return Err(BudgetExceeded {
                what: "subspace census",
                needed: needed.clone(),
                limit: self.subspaces,
            });
        }
        Ok(())
    }

    pub fn check_tuples(&self, needed: &ExactInt) -> Result<(), BudgetExceeded> {
        if needed > &ExactInt::from(self.tuples) {
            return Err(BudgetExceeded {
                what: "functional-tuple census",
                needed: needed.clone(),
                limit: self.tuples,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub needed: ExactInt,
    pub limit: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} needs {} steps, over the budget of {}; raise QDENSE_BUDGET or --budget to allow it",
            self.what, self.needed, self.limit
        )
    }
}

impl Error for BudgetExceeded {}
