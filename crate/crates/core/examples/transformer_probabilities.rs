// Turning exported (negative, neutral, positive) probabilities into labels.

use episent::jsonl;
use episent::lexicon::{label_probs, ProbRecord};
use episent::Domain;

const SAMPLE: &str = include_str!("../data/sample_probs.jsonl");

pub fn run_example() -> episent::Result<()> {
    let records: Vec<ProbRecord> = jsonl::parse(SAMPLE.as_bytes())?;
    for domain in [Domain::Covid, Domain::Mpox] {
        println!("{domain:?}");
        for item in label_probs(&records, domain)? {
            println!("  {} polarity {:+.3} -> {}", item.id, item.polarity, item.label);
        }
    }
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
