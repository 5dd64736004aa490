use episent::metrics::{evaluate, EvalReport};
use episent::SentimentLabel::{self, Negative as N, Neutral as U, Positive as P};
use proptest::prelude::*;

const CLASSES: [SentimentLabel; 3] = [P, N, U];

fn pairs() -> impl Strategy<Value = Vec<(SentimentLabel, SentimentLabel)>> {
    let l = || prop::sample::select(CLASSES.to_vec());
    prop::collection::vec((l(), l()), 1..60)
}

fn split(p: &[(SentimentLabel, SentimentLabel)]) -> (Vec<SentimentLabel>, Vec<SentimentLabel>) {
    p.iter().copied().unzip()
}

fn micro(r: &EvalReport) -> (f64, f64) {
    let k = r.classes.len();
    let tp: u64 = (0..k).map(|i| r.confusion[i][i]).sum();
    let pred_total: u64 = (0..k).map(|j| (0..k).map(|i| r.confusion[i][j]).sum::<u64>()).sum();
    let gold_total: u64 = r.confusion.iter().flatten().sum();
    (tp as f64 / pred_total as f64, tp as f64 / gold_total as f64)
}

#[test]
fn mixed_example() {
    let r = evaluate(&[P, N, P], &[P, N, N], &[P, N]).unwrap();
    assert!((r.accuracy - 2.0 / 3.0).abs() < 1e-12);
    assert!((r.macro_avg.f1 - 2.0 / 3.0).abs() < 1e-12);
}

proptest! {
    #[test]
    fn joint_permutation_changes_nothing(p in pairs(), seed in any::<u64>()) {
        let (g, q) = split(&p);
        let base = evaluate(&g, &q, &CLASSES).unwrap();
        let mut shuffled = p.clone();
        let n = shuffled.len();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (s >> 33) as usize % (i + 1));
        }
        let (g2, q2) = split(&shuffled);
        prop_assert_eq!(evaluate(&g2, &q2, &CLASSES).unwrap(), base);
    }

    #[test]
    fn accuracy_equals_micro_precision_and_recall(p in pairs()) {
        let (g, q) = split(&p);
        let r = evaluate(&g, &q, &CLASSES).unwrap();
        let (mp, mr) = micro(&r);
        prop_assert!((r.accuracy - mp).abs() < 1e-12);
        prop_assert!((r.accuracy - mr).abs() < 1e-12);
    }

    #[test]
    fn report_is_self_consistent(p in pairs()) {
        let (g, q) = split(&p);
        let r = evaluate(&g, &q, &CLASSES).unwrap();
        prop_assert!(r.is_self_consistent(1e-12));
        prop_assert_eq!(r.confusion.iter().flatten().sum::<u64>(), p.len() as u64);
        for v in [r.accuracy, r.macro_avg.precision, r.macro_avg.recall, r.macro_avg.f1] {
            prop_assert!((0.0..=1.0).contains(&v));
        }
    }
}
