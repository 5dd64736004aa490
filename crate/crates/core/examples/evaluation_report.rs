use episent::metrics::evaluate;
use episent::SentimentLabel::{Negative, Neutral, Positive};

pub fn run_example() -> episent::Result<()> {
    let gold = [Positive, Positive, Negative, Neutral, Neutral, Negative];
    let pred = [Positive, Negative, Negative, Neutral, Positive, Negative];
    let report = evaluate(&gold, &pred, &[Positive, Negative, Neutral])?;
    println!("confusion (rows gold, columns predicted):");
    for (label, row) in report.classes.iter().zip(&report.confusion) {
        println!("  {label:<8} {row:?}");
    }
    for c in &report.per_class {
        println!(
            "  {:<8} P={:.3} R={:.3} F1={:.3} n={}",
            c.label, c.precision, c.recall, c.f1, c.support
        );
    }
    println!("accuracy {:.3}, macro F1 {:.3}", report.accuracy, report.macro_avg.f1);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
