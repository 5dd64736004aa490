use episent::textprep::{preprocess_text, PrepConfig, PrepFlags};

pub fn run_example() -> episent::Result<()> {
    let config = PrepConfig::bundled();
    let tweets = [
        "The vaccine is GOOD! https://x.co",
        "@WHO says 3 new cases 😷 #covid19 in the cities",
        "People are hopeful about the pandemic ending 😊",
    ];
    for (i, text) in tweets.iter().enumerate() {
        let doc = preprocess_text(&format!("t{i}"), text, &config);
        println!("{text}");
        println!("  tokens {:?}", doc.tokens);
        println!("  stems  {:?}", doc.stems);
        println!("  lemmas {:?}", doc.lemmas);
    }

    // keep stopwords and hashtags
    let flags = PrepFlags {
        drop_stopwords: false,
        strip_hashtags: false,
        ..PrepFlags::default()
    };
    let loose = PrepConfig::with_overrides(flags, None, None, None)?;
    let doc = preprocess_text("loose", tweets[1], &loose);
    println!("without stopword or hashtag removal: {:?}", doc.tokens);
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
