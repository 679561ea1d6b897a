use alloc::vec;
use alloc::vec::Vec;

use super::ArithError;

/// Default upper bound on prime values produced by [`PrimeStream`].
pub const DEFAULT_PRIME_CAP: u64 = 1_000_000;

const SEGMENT: u64 = 1 << 15;

/// Odd primes in increasing order, produced by a segmented sieve and
/// bounded above by a hard cap.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    cap: u64,
    base: Vec<u64>,
    base_limit: u64,
    segment_lo: u64,
    segment: Vec<bool>,
    cursor: usize,
}

impl PrimeStream {
    pub fn new(cap: u64) -> Self {
        PrimeStream {
            cap,
            base: Vec::new(),
            base_limit: 1,
            segment_lo: 3,
            segment: Vec::new(),
            cursor: 0,
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn ensure_base(&mut self, hi: u64) {
        let need = isqrt(hi) + 1;
        if need <= self.base_limit {
            return;
        }
        let limit = need.max(self.base_limit * 2);
        let mut sieve = vec![true; limit as usize + 1];
        sieve[0] = false;
        if limit >= 1 {
            sieve[1] = false;
        }
        let mut i = 2usize;
        while i * i <= limit as usize {
            if sieve[i] {
                let mut j = i * i;
                while j <= limit as usize {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        self.base = (3..=limit).filter(|&k| sieve[k as usize]).collect();
        self.base_limit = limit;
    }

    // Segment entry k stands for the odd number segment_lo + 2k.
    fn fill_segment(&mut self) -> bool {
        if self.segment_lo > self.cap {
            return false;
        }
        let hi = (self.segment_lo + 2 * SEGMENT).min(self.cap + 1);
        self.ensure_base(hi);
        let len = (hi - self.segment_lo).div_ceil(2);
        self.segment.clear();
        self.segment.resize(len as usize, true);
        for &p in &self.base {
            if p * p >= hi {
                break;
            }
            let mut start = (p * p).max(self.segment_lo.div_ceil(p) * p);
            if start % 2 == 0 {
                start += p;
            }
            let mut m = start;
            while m < hi {
                self.segment[((m - self.segment_lo) / 2) as usize] = false;
                m += 2 * p;
            }
        }
        self.cursor = 0;
        true
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            while self.cursor < self.segment.len() {
                let k = self.cursor;
                self.cursor += 1;
                if self.segment[k] {
                    let value = self.segment_lo + 2 * k as u64;
                    if value > self.cap {
                        return None;
                    }
                    return Some(value);
                }
            }
            if !self.segment.is_empty() {
                self.segment_lo += 2 * self.segment.len() as u64;
                self.segment.clear();
            }
            if !self.fill_segment() {
                return None;
            }
        }
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = libm::sqrt(n as f64) as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// The first `count` odd primes, starting at 3, drawn from primes below `cap`.
pub fn odd_primes(count: usize, cap: u64) -> Result<Vec<u64>, ArithError> {
    if count == 0 {
        return Err(ArithError::Domain(0, "odd_primes"));
    }
    let out: Vec<u64> = PrimeStream::new(cap).take(count).collect();
    if out.len() < count {
        return Err(ArithError::PrimeCapExceeded {
            cap,
            found: out.len(),
        });
    }
    Ok(out)
}
