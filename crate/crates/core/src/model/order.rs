use std::cmp::Ordering;

use super::{is_prefix, Str};
use crate::error::{Error, Result};

/// The total order `<₀` on strings: prefixes first, otherwise compare the
/// entries at the first position where the strings disagree.
pub fn order_lt0(sigma: &Str, tau: &Str) -> Result<bool> {
    if sigma == tau {
        return Err(Error::EqualInput(sigma.clone()));
    }
    Ok(lt0_unchecked(sigma, tau))
}

fn lt0_unchecked(sigma: &Str, tau: &Str) -> bool {
    if is_prefix(sigma, tau) {
        return true;
    }
    match sigma.first_difference(tau) {
        Some(d) => sigma.items()[d] < tau.items()[d],
        // tau ≺ sigma
        None => false,
    }
}

/// `<₀` as an `Ordering`, usable with `sort_by`.
pub fn cmp_lt0(sigma: &Str, tau: &Str) -> Ordering {
    if sigma == tau {
        Ordering::Equal
    } else if lt0_unchecked(sigma, tau) {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(order_lt0(&Str::from([0]), &Str::from([0, 1])).unwrap());
        assert!(order_lt0(&Str::from([0, 5]), &Str::from([1])).unwrap());
        assert!(!order_lt0(&Str::from([2, 3]), &Str::from([2, 1])).unwrap());
        assert!(matches!(
            order_lt0(&Str::from([1]), &Str::from([1])),
            Err(Error::EqualInput(_))
        ));
    }

    #[test]
    fn prefix_after_shorter() {
        assert!(!order_lt0(&Str::from([0, 1]), &Str::from([0])).unwrap());
        assert!(order_lt0(&Str::empty(), &Str::from([0])).unwrap());
    }
}
