// Load the bundled COVID and mpox mini corpora and summarize them.

use episent::corpus::{parse_corpus, Schema};
use episent::resources::{MINI_COVID_CSV, MINI_MPOX_CSV};

pub fn run_example() -> episent::Result<()> {
    for (csv, schema, name) in [
        (MINI_COVID_CSV, Schema::Covid, "mini_covid"),
        (MINI_MPOX_CSV, Schema::Mpox, "mini_mpox"),
    ] {
        let (records, meta) = parse_corpus(csv.as_bytes(), schema, name)?;
        println!(
            "{}: {} records, {} rows dropped for missing text",
            meta.name, meta.record_count, meta.dropped_missing
        );
        if let Some((from, to)) = meta.date_range {
            println!("  dates {} .. {}", from.date_naive(), to.date_naive());
        }
        let first = &records[0];
        println!("  first: {} {:?} place={:?}", first.id, first.text, first.place);
    }
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
