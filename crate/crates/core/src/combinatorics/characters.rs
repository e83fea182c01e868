//! Symmetric group characters by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::partition::Partition;
use crate::error::{Error, Result};

type CharKey = (Vec<usize>, Vec<usize>);

fn cache() -> &'static Mutex<HashMap<CharKey, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<CharKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `chi_lambda` on the class of cycle type `mu`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigRational> {
    Ok(BigRational::from_integer(character_value(lambda, mu)?.into()))
}

/// Integer form of [`mn_character`].
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    let ell = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + ell - 1 - i).collect();
    Ok(mn_beta(beta, mu.parts()))
}

// The beta set of a partition is strictly decreasing; removing a rim hook of
// length r moves one bead from b to b - r onto an empty position, with sign
// given by the parity of the beads jumped over.
fn mn_beta(beta: Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beta.clone(), mu.to_vec());
    if let Some(&v) = cache().lock().unwrap().get(&key) {
        return v;
    }
    let mut total = 0;
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(normalize(next), rest);
    }
    cache().lock().unwrap().insert(key, total);
    total
}

/// Drop the bottom run of beads `0, 1, .., k-1` (zero parts) and shift down.
fn normalize(mut beta: Vec<usize>) -> Vec<usize> {
    let mut k = 0;
    while beta.len() > k && beta[beta.len() - 1 - k] == k {
        k += 1;
    }
    beta.truncate(beta.len() - k);
    beta.iter().map(|b| b - k).collect()
}

/// Number of standard tableaux of the shape, by the hook length formula.
pub fn hook_dimension(lambda: &Partition) -> u64 {
    let n = lambda.size();
    let mut num = BigInt::from(1u32);
    for k in 2..=n {
        num *= k;
    }
    let mut den = BigInt::from(1u32);
    for (r, c) in lambda.boxes() {
        den *= lambda.hook_length(r, c);
    }
    let q: BigInt = num / den;
    q.try_into().expect("dimension fits in u64")
}

/// Centralizer order `z_mu = prod_i i^{m_i} m_i!`.
pub fn centralizer_order(mu: &Partition) -> BigInt {
    let mut z = BigInt::from(1u32);
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
        z *= p;
    }
    for m in counts.values() {
        for k in 2..=*m {
            z *= k;
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::from(1u32), |acc, k| acc * k)
}

/// Size of the conjugacy class of cycle type `mu`.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.size()) / centralizer_order(mu)
}

/// Word in simple reflections (1-based) for a permutation of cycle type
/// `mu` whose cycles are on consecutive letters.
pub fn class_representative_word(mu: &Partition) -> Vec<usize> {
    let mut word = Vec::new();
    let mut start = 1;
    for &len in mu.parts() {
        word.extend(start..start + len - 1);
        start += len;
    }
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Permutation, StandardTableau};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(character_value(&p("3"), &p("2,1")).unwrap(), 1);
        assert_eq!(character_value(&p("1,1,1"), &p("2,1")).unwrap(), -1);
        assert_eq!(character_value(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(character_value(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(character_value(&p("2,2"), &p("2,2")).unwrap(), 2);
        assert!(character_value(&p("2,1"), &p("2")).is_err());
    }

    #[test]
    fn hook_dimension_counts_tableaux() {
        for n in 0..=8 {
            for lambda in Partition::all(n) {
                let d = hook_dimension(&lambda);
                assert_eq!(d as usize, StandardTableau::all(&lambda).len(), "{lambda}");
                let ones = Partition::column(n);
                assert_eq!(character_value(&lambda, &ones).unwrap(), d as i64);
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=7 {
            let total: BigInt = Partition::all(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn representative_has_requested_cycle_type() {
        for mu in Partition::all(6) {
            let w = Permutation::from_word(6, &class_representative_word(&mu));
            assert_eq!(w.cycle_type(), mu);
        }
    }
}
