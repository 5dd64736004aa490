use episent::lexicon::{
    adjust_covid, adjust_mpox, classify, transformer_polarity, ClassifyScheme, PolarityScore, ProbTriple,
};
use episent::{Domain, SentimentLabel};
use proptest::prelude::*;

const SCHEMES: [ClassifyScheme; 4] = [
    ClassifyScheme::CovidRoberta,
    ClassifyScheme::MpoxRoberta,
    ClassifyScheme::CovidTextblob,
    ClassifyScheme::MpoxTextblob,
];

fn scheme() -> impl Strategy<Value = ClassifyScheme> {
    prop::sample::select(SCHEMES.to_vec())
}

fn triple() -> impl Strategy<Value = ProbTriple> {
    (0.0f64..1.0, 0.0f64..1.0, 0.0f64..1.0).prop_map(|(a, b, c)| {
        let s = a + b + c + 1e-9;
        ProbTriple {
            p_neg: a / s,
            p_neu: b / s,
            p_pos: c / s,
        }
    })
}

proptest! {
    #[test]
    fn classify_is_monotone(s in scheme(), a in -5.0f64..5.0, b in -5.0f64..5.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let rank = |x| classify(PolarityScore(x), s).polarity_rank();
        prop_assert!(rank(lo) <= rank(hi));
    }

    #[test]
    fn classify_partitions_the_line(s in scheme(), x in -5.0f64..5.0) {
        let (pos, neg) = s.thresholds();
        let label = classify(PolarityScore(x), s);
        let hits = [x > pos, x < neg, x >= neg && x <= pos];
        prop_assert_eq!(hits.iter().filter(|h| **h).count(), 1);
        let expected = if hits[0] {
            SentimentLabel::Positive
        } else if hits[1] {
            SentimentLabel::Negative
        } else {
            SentimentLabel::Neutral
        };
        prop_assert_eq!(label, expected);
    }

    #[test]
    fn covid_negative_keywords_pin_below(p in -1.0f64..1.0, pos in 0usize..5, neg in 1usize..5) {
        prop_assert!(adjust_covid(PolarityScore(p), pos, neg).value() <= -0.3);
    }

    #[test]
    fn covid_positive_keywords_floor(p in -1.0f64..1.0, pos in 1usize..5) {
        prop_assert!(adjust_covid(PolarityScore(p), pos, 0).value() >= 0.2);
    }

    #[test]
    fn mpox_positive_keywords_cap(p in -1.0f64..1.0, pos in 1usize..5, neg in 0usize..5) {
        let v = adjust_mpox(PolarityScore(p), pos, neg).value();
        prop_assert!(v <= 0.95);
        prop_assert!(v >= p.min(0.95));
    }

    #[test]
    fn mpox_negative_branch_floor(p in -1.0f64..1.0, neg in 1usize..8) {
        let v = adjust_mpox(PolarityScore(p), 0, neg).value();
        prop_assert!(v >= -0.5);
        prop_assert!(v <= p.max(-0.5));
    }

    #[test]
    fn no_keywords_leave_polarity_alone(p in -1.0f64..1.0) {
        prop_assert_eq!(adjust_covid(PolarityScore(p), 0, 0).value(), p);
        prop_assert_eq!(adjust_mpox(PolarityScore(p), 0, 0).value(), p);
    }

    #[test]
    fn swapping_pos_and_neg_reflects_polarity(t in triple()) {
        let swapped = ProbTriple { p_neg: t.p_pos, p_neu: t.p_neu, p_pos: t.p_neg };
        for (domain, shift) in [(Domain::Covid, -1.0), (Domain::Mpox, -2.4)] {
            let x = transformer_polarity(&t, domain).value();
            let y = transformer_polarity(&swapped, domain).value();
            prop_assert!((y - (-x + shift)).abs() < 1e-12, "{:?}: {} vs {}", domain, x, y);
        }
    }

    #[test]
    fn transformer_polarity_is_affine(a in triple(), b in triple(), w in 0.0f64..1.0) {
        let mix = ProbTriple {
            p_neg: w * a.p_neg + (1.0 - w) * b.p_neg,
            p_neu: w * a.p_neu + (1.0 - w) * b.p_neu,
            p_pos: w * a.p_pos + (1.0 - w) * b.p_pos,
        };
        for domain in [Domain::Covid, Domain::Mpox] {
            let f = |t: &ProbTriple| transformer_polarity(t, domain).value();
            prop_assert!((f(&mix) - (w * f(&a) + (1.0 - w) * f(&b))).abs() < 1e-12);
        }
    }
}
