use episent::classify::{loss_and_gradient, softmax, train_lr, train_nb, DenseFixture, LrConfig};
use episent::tfidf::DocTermMatrix;
use episent::SentimentLabel::{self, Negative as N, Neutral as U, Positive as P};
use proptest::prelude::*;

/// All count matrices with `n_docs` rows, `v` columns and at most
/// `max_len` tokens per row.
fn count_rows(v: usize, max_len: usize) -> Vec<Vec<f64>> {
    let mut rows = vec![vec![]];
    for _ in 0..v {
        rows = rows
            .into_iter()
            .flat_map(|r: Vec<f64>| (0..=max_len).map(move |c| [r.clone(), vec![c as f64]].concat()))
            .filter(|r| r.iter().sum::<f64>() <= max_len as f64)
            .collect();
    }
    rows
}

fn product<T: Clone>(items: &[T], n: usize) -> Vec<Vec<T>> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|p| items.iter().map(move |x| [p.clone(), vec![x.clone()]].concat()))
            .collect()
    })
}

/// Bayes rule with Laplace smoothing, written out per class in product form
/// and then logged.
fn nb_oracle(rows: &[Vec<f64>], labels: &[SentimentLabel], alpha: f64, query: &[f64]) -> Vec<(SentimentLabel, f64)> {
    let v = query.len();
    SentimentLabel::ALL
        .into_iter()
        .filter(|c| labels.contains(c))
        .map(|c| {
            let members: Vec<&Vec<f64>> = rows
                .iter()
                .zip(labels)
                .filter(|(_, l)| **l == c)
                .map(|(r, _)| r)
                .collect();
            let prior = members.len() as f64 / rows.len() as f64;
            let total: f64 = members.iter().flat_map(|r| r.iter()).sum();
            let mut prob = prior;
            for t in 0..v {
                let mass: f64 = members.iter().map(|r| r[t]).sum();
                prob *= ((mass + alpha) / (total + alpha * v as f64)).powf(query[t]);
            }
            (c, prob.ln())
        })
        .collect()
}

fn check_nb_enumeration(v: usize, max_docs: usize, max_len: usize) -> usize {
    let rows = count_rows(v, max_len);
    let mut cases = 0;
    for n in 1..=max_docs {
        for docs in product(&rows, n) {
            let matrix = DocTermMatrix::from_dense(&docs).unwrap();
            for labels in product(&[P, N, U], n) {
                let model = train_nb(&matrix, &labels, 1.0).unwrap();
                for q in &rows {
                    let sparse: Vec<(usize, f64)> = q.iter().copied().enumerate().filter(|(_, x)| *x != 0.0).collect();
                    let ours = model.log_scores(&sparse);
                    let oracle = nb_oracle(&docs, &labels, 1.0, q);
                    assert_eq!(model.classes, oracle.iter().map(|o| o.0).collect::<Vec<_>>());
                    for (a, (_, b)) in ours.iter().zip(&oracle) {
                        assert!((a - b).abs() < 1e-9, "{docs:?} {labels:?} {q:?}: {a} vs {b}");
                    }
                }
                cases += 1;
            }
        }
    }
    cases
}

#[test]
fn nb_matches_enumeration_oracle_three_terms() {
    assert!(check_nb_enumeration(3, 3, 2) > 1000);
}

#[test]
fn nb_matches_enumeration_oracle_four_docs() {
    assert!(check_nb_enumeration(2, 4, 2) > 10_000);
}

fn gradient_fixture() -> (DocTermMatrix, Vec<usize>) {
    let rows = vec![
        vec![1.0, 0.2],
        vec![0.8, -0.1],
        vec![0.1, 0.9],
        vec![-0.3, 1.2],
        vec![0.0, 0.0],
        vec![0.4, 0.5],
    ];
    (DocTermMatrix::from_dense(&rows).unwrap(), vec![0, 0, 1, 1, 2, 2])
}

/// Independent dense loss: mean cross-entropy through explicit
/// exponentials, plus the weight penalty.
fn dense_loss(w: &[Vec<f64>], b: &[f64], x: &[Vec<f64>], y: &[usize], l2: f64) -> f64 {
    let mut total = 0.0;
    for (row, &target) in x.iter().zip(y) {
        let z: Vec<f64> = (0..b.len())
            .map(|c| b[c] + row.iter().zip(&w[c]).map(|(a, v)| a * v).sum::<f64>())
            .collect();
        let denom: f64 = z.iter().map(|v| v.exp()).sum();
        total -= (z[target].exp() / denom).ln();
    }
    let penalty: f64 = w.iter().flatten().map(|v| v * v).sum();
    total / y.len() as f64 + 0.5 * l2 * penalty
}

#[test]
fn lr_gradient_matches_finite_differences() {
    let (matrix, y) = gradient_fixture();
    let dense: Vec<Vec<f64>> = (0..6).map(|i| (0..2).map(|j| matrix.get(i, j)).collect()).collect();
    let w = vec![vec![0.3, -0.2], vec![-0.5, 0.4], vec![0.1, 0.05]];
    let b = vec![0.05, -0.1, 0.2];
    let l2 = 1e-2;
    let h = 1e-5;
    let g = loss_and_gradient(&w, &b, &matrix, &y, l2);
    assert!((g.loss - dense_loss(&w, &b, &dense, &y, l2)).abs() < 1e-12);
    let rel = |a: f64, n: f64| (a - n).abs() / a.abs().max(n.abs()).max(1e-8);
    for c in 0..3 {
        for t in 0..2 {
            let (mut wp, mut wm) = (w.clone(), w.clone());
            wp[c][t] += h;
            wm[c][t] -= h;
            let numeric = (dense_loss(&wp, &b, &dense, &y, l2) - dense_loss(&wm, &b, &dense, &y, l2)) / (2.0 * h);
            assert!(rel(g.grad_weights[c][t], numeric) < 1e-4, "w[{c}][{t}]");
        }
        let (mut bp, mut bm) = (b.clone(), b.clone());
        bp[c] += h;
        bm[c] -= h;
        let numeric = (dense_loss(&w, &bp, &dense, &y, l2) - dense_loss(&w, &bm, &dense, &y, l2)) / (2.0 * h);
        assert!(rel(g.grad_bias[c], numeric) < 1e-4, "b[{c}]");
    }
}

#[test]
fn lr_separable_fixture_converges() {
    let fixture = DenseFixture::separable();
    let matrix = fixture.matrix().unwrap();
    let labels = fixture.labels();
    let config = LrConfig {
        learning_rate: 0.5,
        epochs: 500,
        ..LrConfig::default()
    };
    let t = train_lr(&matrix, &labels, &config).unwrap();
    assert!(t.loss_history.windows(2).all(|w| w[1] <= w[0]));
    assert!((t.loss_history[0] - 3f64.ln()).abs() < 1e-12);
    for (row, gold) in matrix.rows.iter().zip(&labels) {
        assert_eq!(t.model.predict(row).0, *gold);
    }
}

#[test]
fn retraining_is_bit_identical() {
    let fixture = DenseFixture::separable();
    let matrix = fixture.matrix().unwrap();
    let labels = fixture.labels();
    let a = train_lr(&matrix, &labels, &LrConfig::default()).unwrap();
    let b = train_lr(&matrix, &labels, &LrConfig::default()).unwrap();
    assert_eq!(
        serde_json::to_string(&a.model).unwrap(),
        serde_json::to_string(&b.model).unwrap()
    );
    let a = train_nb(&matrix, &labels, 1.0).unwrap();
    let b = train_nb(&matrix, &labels, 1.0).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

proptest! {
    #[test]
    fn softmax_ignores_shifts(z in prop::collection::vec(-30.0f64..30.0, 1..5), c in -500.0f64..500.0) {
        let shifted: Vec<f64> = z.iter().map(|v| v + c).collect();
        let (a, b) = (softmax(&z), softmax(&shifted));
        prop_assert!((a.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn softmax_survives_huge_logits(z in prop::collection::vec(-1e4f64..1e4, 1..5)) {
        let p = softmax(&z);
        prop_assert!(p.iter().all(|v| v.is_finite()));
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn nb_prediction_unaffected_by_score_offset(rows in prop::collection::vec(prop::collection::vec(0.0f64..3.0, 3), 3..6), offset in -50.0f64..50.0) {
        let labels: Vec<SentimentLabel> = (0..rows.len()).map(|i| SentimentLabel::ALL[i % 3]).collect();
        let matrix = DocTermMatrix::from_dense(&rows).unwrap();
        let mut model = train_nb(&matrix, &labels, 1.0).unwrap();
        let before: Vec<SentimentLabel> = matrix.rows.iter().map(|r| model.predict(r).0).collect();
        for p in &mut model.log_prior {
            *p += offset;
        }
        let after: Vec<SentimentLabel> = matrix.rows.iter().map(|r| model.predict(r).0).collect();
        prop_assert_eq!(before, after);
    }
}
