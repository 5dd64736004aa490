use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub test_fraction: f64,
    pub seed: u64,
}

impl Default for SplitSpec {
    fn default() -> Self {
        SplitSpec {
            test_fraction: 0.2,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitIndices {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

/// Seeded Fisher-Yates permutation of `0..n`; the first
/// `round(test_fraction * n)` positions become the test set.
pub fn split_indices(n: usize, spec: &SplitSpec) -> Result<SplitIndices> {
    if n < 2 {
        return Err(Error::Validation(format!("need at least 2 items to split, got {n}")));
    }
    if !(spec.test_fraction > 0.0 && spec.test_fraction < 1.0) {
        return Err(Error::Validation(format!(
            "test_fraction must be in (0, 1), got {}",
            spec.test_fraction
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let n_test = (spec.test_fraction * n as f64).round() as usize;
    let train = perm.split_off(n_test);
    Ok(SplitIndices { train, test: perm })
}

pub struct Split<T, L> {
    pub train_items: Vec<T>,
    pub train_labels: Vec<L>,
    pub test_items: Vec<T>,
    pub test_labels: Vec<L>,
}

pub fn train_test_split<T: Clone, L: Clone>(items: &[T], labels: &[L], spec: &SplitSpec) -> Result<Split<T, L>> {
    if items.len() != labels.len() {
        return Err(Error::LengthMismatch {
            left: items.len(),
            right: labels.len(),
        });
    }
    let idx = split_indices(items.len(), spec)?;
    let pick_items = |ix: &[usize]| ix.iter().map(|&i| items[i].clone()).collect();
    let pick_labels = |ix: &[usize]| ix.iter().map(|&i| labels[i].clone()).collect();
    Ok(Split {
        train_items: pick_items(&idx.train),
        train_labels: pick_labels(&idx.train),
        test_items: pick_items(&idx.test),
        test_labels: pick_labels(&idx.test),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let items: Vec<u32> = (0..10).collect();
        let s = train_test_split(&items, &items, &SplitSpec::default()).unwrap();
        assert_eq!((s.train_items.len(), s.test_items.len()), (8, 2));
        assert_eq!(s.train_items, s.train_labels);

        let idx = split_indices(5, &SplitSpec::default()).unwrap();
        assert_eq!((idx.train.len(), idx.test.len()), (4, 1));
    }

    #[test]
    fn deterministic_and_seed_sensitive() {
        let a = split_indices(50, &SplitSpec::default()).unwrap();
        let b = split_indices(50, &SplitSpec::default()).unwrap();
        assert_eq!(a, b);
        let c = split_indices(
            50,
            &SplitSpec {
                seed: 7,
                ..SplitSpec::default()
            },
        )
        .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn partition_is_exhaustive() {
        let idx = split_indices(
            37,
            &SplitSpec {
                test_fraction: 0.3,
                seed: 1,
            },
        )
        .unwrap();
        let mut all: Vec<usize> = idx.train.iter().chain(&idx.test).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..37).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(split_indices(1, &SplitSpec::default()).is_err());
        assert!(split_indices(
            10,
            &SplitSpec {
                test_fraction: 1.0,
                seed: 0
            }
        )
        .is_err());
        assert!(train_test_split(&[1, 2, 3], &[1, 2], &SplitSpec::default()).is_err());
    }
}
