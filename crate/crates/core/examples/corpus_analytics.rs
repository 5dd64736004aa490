// Term frequencies, word-cloud weights, label shares, demographic mentions
// and a case fatality rate.

use episent::analytics::{
    bundled_demographics, cfr, demographic_mentions, sentiment_distribution, word_frequency, wordcloud_csv,
    wordcloud_weights,
};
use episent::corpus::{parse_corpus, Schema};
use episent::lexicon::{label_documents, KeywordLexicon};
use episent::resources::MINI_COVID_CSV;
use episent::textprep::{preprocess, PrepConfig};
use episent::{Domain, SentimentLabel};

pub fn run_example() -> episent::Result<()> {
    let (records, _) = parse_corpus(MINI_COVID_CSV.as_bytes(), Schema::Covid, "mini_covid")?;
    let prep = PrepConfig::bundled();
    let docs: Vec<_> = records.iter().map(|r| preprocess(r, &prep)).collect();
    let tokens: Vec<&[String]> = docs.iter().map(|d| d.tokens.as_slice()).collect();

    println!("top terms:");
    for (term, count) in word_frequency(&tokens, 8) {
        println!("  {term:<14} {count}");
    }

    let labels: Vec<SentimentLabel> = label_documents(&docs, &KeywordLexicon::bundled(), Domain::Covid)
        .into_iter()
        .map(|l| l.label)
        .collect();
    let negative_cloud = wordcloud_weights(&tokens, Some(&labels), Some(SentimentLabel::Negative))?;
    let csv = wordcloud_csv(&negative_cloud)?;
    println!("negative word cloud ({} terms), head:", negative_cloud.len());
    for line in csv.lines().take(4) {
        println!("  {line}");
    }

    let dist = sentiment_distribution(&labels)?;
    for share in &dist.shares {
        println!("{:<8} {:>4} {:6.2}%", share.label, share.count, share.percent);
    }

    println!(
        "demographic mentions {:?}",
        demographic_mentions(&tokens, &bundled_demographics())
    );

    let rate = cfr(1_300_000, 44_000_000)?;
    println!("CFR {:.2}%", rate.cfr_percent);
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
