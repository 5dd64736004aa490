use episent::analytics::compare_corpora;
use episent::corpus::{parse_corpus, Schema};
use episent::lexicon::{label_documents, KeywordLexicon};
use episent::resources::{MINI_COVID_CSV, MINI_MPOX_CSV};
use episent::textprep::{preprocess, PrepConfig};
use episent::{Domain, SentimentLabel};

fn labels(csv: &str, schema: Schema, domain: Domain) -> episent::Result<Vec<SentimentLabel>> {
    let (records, _) = parse_corpus(csv.as_bytes(), schema, "corpus")?;
    let prep = PrepConfig::bundled();
    let docs: Vec<_> = records.iter().map(|r| preprocess(r, &prep)).collect();
    Ok(label_documents(&docs, &KeywordLexicon::bundled(), domain)
        .into_iter()
        .map(|l| l.label)
        .collect())
}

pub fn run_example() -> episent::Result<()> {
    let covid = labels(MINI_COVID_CSV, Schema::Covid, Domain::Covid)?;
    let mpox = labels(MINI_MPOX_CSV, Schema::Mpox, Domain::Mpox)?;
    let report = compare_corpora(&covid, &mpox, ("covid", "mpox"))?;
    for (name, d) in [(&report.left_name, &report.left), (&report.right_name, &report.right)] {
        let shares: Vec<String> = d
            .shares
            .iter()
            .map(|s| format!("{} {:.1}%", s.label, s.percent))
            .collect();
        println!("{name:<6} n={:<4} {}", d.total_count, shares.join("  "));
    }
    println!("pearson r {:+.4}", report.pearson_r);
    println!(
        "chi-square {:.3} (df {}), p = {:.3e}",
        report.chi2.statistic, report.chi2.df, report.chi2.p_value
    );
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
