use episent::tfidf::{build_vocabulary, transform};

fn doc(tokens: &[&str]) -> Vec<String> {
    tokens.iter().map(|t| t.to_string()).collect()
}

pub fn run_example() -> episent::Result<()> {
    let docs = vec![
        doc(&["covid", "vaccine", "covid"]),
        doc(&["mpox", "vaccine"]),
        doc(&["lockdown", "news"]),
    ];
    let vocab = build_vocabulary(&docs, 5000)?;
    println!("{} terms over {} documents", vocab.len(), vocab.n_docs());
    for term in vocab.terms() {
        println!(
            "  {term:<10} df={} idf={:+.6}",
            vocab.df(term).unwrap_or(0),
            vocab.idf(term)?
        );
    }

    let matrix = transform(&docs, &vocab);
    for (i, row) in matrix.rows.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|(c, w)| format!("{}={w:.6}", vocab.terms()[*c]))
            .collect();
        println!("D{}: {}", i + 1, cells.join(" "));
    }

    // a capped vocabulary keeps the highest-mass terms
    let small = build_vocabulary(&docs, 2)?;
    println!("top 2: {:?}  digest {}", small.terms(), &small.digest()[..16]);
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
