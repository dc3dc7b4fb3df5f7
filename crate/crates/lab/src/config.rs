//! Budget overrides from the `LKLAB_BUDGET` environment variable, e.g.
//! `LKLAB_BUDGET="alpha=500,psi=12"`.

use lklab_core::Budget;

use crate::{LabError, Result};

pub const BUDGET_ENV: &str = "LKLAB_BUDGET";

/// Applies comma-separated `key=value` overrides to `base`.
pub fn parse_budget(spec: &str, base: Budget) -> Result<Budget> {
    let mut budget = base;
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| {
            LabError::Usage(format!("{BUDGET_ENV}: expected key=value, got {item:?}"))
        })?;
        let value: usize = value.trim().parse().map_err(|_| {
            LabError::Usage(format!(
                "{BUDGET_ENV}: {key} needs a non-negative integer, got {value:?}"
            ))
        })?;
        let slot = match key.trim() {
            "alpha" => &mut budget.alpha,
            "enumerate" => &mut budget.enumerate,
            "chi" => &mut budget.chi,
            "psi" => &mut budget.psi,
            "hom_domain" => &mut budget.hom_domain,
            "hom_codomain" => &mut budget.hom_codomain,
            "nu" => &mut budget.nu,
            other => {
                return Err(LabError::Usage(format!(
                    "{BUDGET_ENV}: unknown budget {other:?}"
                )))
            }
        };
        *slot = value;
    }
    Ok(budget)
}

/// The default budget with any overrides from the environment.
pub fn budget_from_env() -> Result<Budget> {
    match std::env::var(BUDGET_ENV) {
        Ok(spec) => parse_budget(&spec, Budget::default()),
        Err(std::env::VarError::NotPresent) => Ok(Budget::default()),
        Err(e) => Err(LabError::Usage(format!("{BUDGET_ENV}: {e}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_apply() {
        let b = parse_budget("alpha=10, psi=3", Budget::default()).unwrap();
        assert_eq!((b.alpha, b.psi, b.chi), (10, 3, Budget::default().chi));
        assert_eq!(
            parse_budget("", Budget::default()).unwrap(),
            Budget::default()
        );
    }

    #[test]
    fn bad_overrides_are_rejected() {
        assert!(parse_budget("alpha", Budget::default()).is_err());
        assert!(parse_budget("alpha=-1", Budget::default()).is_err());
        assert!(parse_budget("gamma=4", Budget::default()).is_err());
    }
}
