//! Integer codings of strings.
//!
//! `phi_code` is the prime-power coding used to enumerate trees in a fixed
//! order: `x₀·…·x_{n−1} ↦ p₀^{x₀+1}·…·p_{n−1}^{x_{n−1}+1} − 1`. The `+1` on
//! the exponents keeps the map injective when entries are zero; it stays
//! strictly increasing along the prefix order.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::Str;
use crate::error::{Error, Result};

const PRIME_TABLE_LEN: usize = 2048;

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut ps: Vec<u64> = Vec::with_capacity(PRIME_TABLE_LEN);
        let mut n = 2u64;
        while ps.len() < PRIME_TABLE_LEN {
            if ps.iter().take_while(|&&p| p * p <= n).all(|&p| !n.is_multiple_of(p)) {
                ps.push(n);
            }
            n += 1;
        }
        ps
    })
}

/// The k-th prime, `p₀ = 2`.
pub fn nth_prime(k: usize) -> u64 {
    let table = primes();
    assert!(
        k < table.len(),
        "strings longer than {} entries are not supported",
        table.len()
    );
    table[k]
}

pub fn phi_code(s: &Str) -> BigUint {
    let mut acc = BigUint::one();
    for (k, &x) in s.items().iter().enumerate() {
        let p = BigUint::from(nth_prime(k));
        let e = u32::try_from(x + 1).expect("string entry too large for phi_code");
        acc *= p.pow(e);
    }
    acc - BigUint::one()
}

/// `phi_code` as a `u64` when it fits.
pub fn phi_code_u64(s: &Str) -> Option<u64> {
    phi_code(s).to_u64()
}

pub fn phi_decode(n: &BigUint) -> Result<Str> {
    let mut rest = n + BigUint::one();
    let mut items = Vec::new();
    let mut k = 0usize;
    while !rest.is_one() {
        let p = BigUint::from(nth_prime(k));
        let mut e = 0u64;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e == 0 {
            return Err(Error::NotACode(n.to_string()));
        }
        items.push(e - 1);
        k += 1;
    }
    Ok(Str::new(items))
}

pub fn phi_decode_u64(n: u64) -> Result<Str> {
    phi_decode(&BigUint::from(n))
}

/// Compares two strings by `phi_code`.
pub fn phi_cmp(a: &Str, b: &Str) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    phi_code(a).cmp(&phi_code(b))
}

/// Sorts strings by increasing `phi_code`, computing each code once.
pub fn sort_by_phi(strings: &mut Vec<Str>) {
    let mut keyed: Vec<(BigUint, Str)> = strings.drain(..).map(|s| (phi_code(&s), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    strings.extend(keyed.into_iter().map(|(_, s)| s));
}

/// Cantor pairing `⟨x, y⟩`; at least `max(x, y)` and increasing in each argument.
pub fn pair(x: u64, y: u64) -> u64 {
    (x + y) * (x + y + 1) / 2 + y
}

pub fn unpair(z: u64) -> (u64, u64) {
    // w = floor((sqrt(8z+1) - 1) / 2), corrected for float error
    let mut w = ((((8 * z + 1) as f64).sqrt() - 1.0) / 2.0) as u64;
    while w * (w + 1) / 2 > z {
        w -= 1;
    }
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    let t = w * (w + 1) / 2;
    let y = z - t;
    (w - y, y)
}

/// Index of a binary string in length-then-lexicographic order:
/// ε ↦ 0, ⟨0⟩ ↦ 1, ⟨1⟩ ↦ 2, ⟨0,0⟩ ↦ 3, …
pub fn binary_index(s: &Str) -> Option<u64> {
    if !s.is_binary() || s.len() >= 63 {
        return None;
    }
    let value = s.items().iter().fold(0u64, |acc, &b| (acc << 1) | b);
    Some((1u64 << s.len()) - 1 + value)
}

pub fn binary_from_index(n: u64) -> Str {
    // length L satisfies 2^L - 1 <= n < 2^{L+1} - 1
    let len = 63 - (n + 1).leading_zeros() as usize;
    let value = n + 1 - (1u64 << len);
    Str::new((0..len).rev().map(|i| (value >> i) & 1).collect())
}
