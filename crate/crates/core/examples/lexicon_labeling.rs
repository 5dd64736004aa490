// Keyword-adjusted lexicon polarity for both domains. The same words get
// pulled negative in the COVID setting and positive in the mpox setting.

use episent::lexicon::{count_keywords, label_tokens, KeywordLexicon};
use episent::textprep::{preprocess_text, PrepConfig};
use episent::Domain;

pub fn run_example() -> episent::Result<()> {
    let prep = PrepConfig::bundled();
    let lexicon = KeywordLexicon::bundled();
    let tweets = [
        "Vaccine rollout is going well, recovery everywhere",
        "Another death reported, fear is spreading",
        "The ministry published a notice",
    ];
    for text in tweets {
        let doc = preprocess_text("x", text, &prep);
        let (pos, neg) = count_keywords(&doc.tokens, &lexicon);
        println!("{text}  (+{pos} / -{neg} keywords)");
        for domain in [Domain::Covid, Domain::Mpox] {
            let (polarity, label) = label_tokens(&doc.tokens, &lexicon, domain);
            println!("  {domain:?}: polarity {:+.4} -> {label}", polarity.value());
        }
    }
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
