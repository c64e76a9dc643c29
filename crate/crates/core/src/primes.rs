//! Deterministic trial-division primality, enough for inputs below `10^12`.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `p` with `lo <= p < hi`.
pub fn primes_in(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..hi).filter(|&n| is_prime(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let got: Vec<u64> = primes_in(0, 30).collect();
        assert_eq!(got, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_in(0, 1000).count(), 168);
        assert!(!is_prime(1) && !is_prime(0) && !is_prime(91));
        assert!(is_prime(997));
    }
}
