use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Deref, Neg, Sub};
use core::str::FromStr;

/// A weight in Dynkin-label coordinates, i.e. the integers `λ(h_i)`.
///
/// Text form is a comma-separated label list where `k^n` repeats `k` a total
/// of `n` times, so `0^6,1` is `[0,0,0,0,0,0,1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(Vec<i32>);

impl Weight {
    pub fn new(labels: Vec<i32>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(alloc::vec![0; rank])
    }

    /// The fundamental weight `ω_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn labels(&self) -> &[i32] {
        &self.0
    }

    pub fn labels_mut(&mut self) -> &mut [i32] {
        &mut self.0
    }

    pub fn into_labels(self) -> Vec<i32> {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&l| l >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&l| l == 0)
    }

    /// Labels all strictly positive.
    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&l| l > 0)
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &[i32], k: i32) -> Weight {
        Weight(self.0.iter().zip(other).map(|(a, b)| a + k * b).collect())
    }
}

impl Deref for Weight {
    type Target = [i32];

    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl From<Vec<i32>> for Weight {
    fn from(v: Vec<i32>) -> Self {
        Weight(v)
    }
}

impl From<&[i32]> for Weight {
    fn from(v: &[i32]) -> Self {
        Weight(v.to_vec())
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, 1)
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|l| -l).collect())
    }
}

// Runs of zeros of length >= 2 and other runs of length >= 3 are compressed.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == v {
                j += 1;
            }
            let run = j - i;
            let compress = run >= 3 || (run == 2 && v == 0);
            let reps = if compress { 1 } else { run };
            for _ in 0..reps {
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                if compress {
                    write!(f, "{}^{}", v, run)?;
                } else {
                    write!(f, "{}", v)?;
                }
            }
            i = j;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed weight token `{token}`: {reason}")]
pub struct ParseWeightError {
    pub token: String,
    pub reason: &'static str,
}

impl FromStr for Weight {
    type Err = ParseWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.is_empty() {
            return Err(ParseWeightError {
                token: s.to_string(),
                reason: "empty weight",
            });
        }
        let mut labels = Vec::new();
        for raw in s.split(',') {
            let token = raw.trim();
            let bad = |reason| ParseWeightError {
                token: token.to_string(),
                reason,
            };
            let (value, count) = match token.split_once(['^', '_']) {
                Some((v, n)) => {
                    let n: usize = n.trim().parse().map_err(|_| bad("bad repeat count"))?;
                    if n == 0 {
                        return Err(bad("repeat count must be positive"));
                    }
                    (v.trim(), n)
                }
                None => (token, 1),
            };
            let value: i32 = value.parse().map_err(|_| bad("not an integer label"))?;
            labels.extend(core::iter::repeat_n(value, count));
        }
        Ok(Weight(labels))
    }
}
