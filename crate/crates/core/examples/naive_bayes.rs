// Multinomial Naive Bayes on TF-IDF features of the mini corpus, using the
// sentiment column that ships with it as the target.

use episent::classify::{train_nb, train_test_split, SplitSpec};
use episent::corpus::{parse_corpus, Schema};
use episent::metrics::evaluate;
use episent::resources::MINI_COVID_CSV;
use episent::textprep::{preprocess, PrepConfig};
use episent::tfidf::{build_vocabulary, transform};
use episent::SentimentLabel;

pub fn run_example() -> episent::Result<()> {
    let (records, _) = parse_corpus(MINI_COVID_CSV.as_bytes(), Schema::Covid, "mini_covid")?;
    let prep = PrepConfig::bundled();
    let docs: Vec<Vec<String>> = records.iter().map(|r| preprocess(r, &prep).stems).collect();
    let labels: Vec<SentimentLabel> = records
        .iter()
        .map(|r| r.provided_sentiment.unwrap_or(SentimentLabel::Neutral))
        .collect();

    let split = train_test_split(&docs, &labels, &SplitSpec::default())?;
    let vocab = build_vocabulary(&split.train_items, 5000)?;
    let model = train_nb(&transform(&split.train_items, &vocab), &split.train_labels, 1.0)?;
    println!("classes {:?}", model.classes);
    println!("log priors {:?}", model.log_prior);

    let test = transform(&split.test_items, &vocab);
    let pred: Vec<SentimentLabel> = test.rows.iter().map(|r| model.predict(r).0).collect();
    let report = evaluate(&split.test_labels, &pred, &model.classes)?;
    println!(
        "held-out accuracy {:.3}, macro F1 {:.3} on {} tweets",
        report.accuracy,
        report.macro_avg.f1,
        pred.len()
    );
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
