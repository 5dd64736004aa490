// Ingest, preprocess, lexicon-label, train and evaluate in one call, then
// write every stage artifact to a directory.
//
// ```text
// cargo run --example full_pipeline -- [output-dir]
// ```

use std::path::PathBuf;

use episent::corpus::{parse_corpus, Schema};
use episent::pipeline::{run_on_records, ModelKind, PipelineConfig};
use episent::resources::MINI_COVID_CSV;
use episent::Domain;

pub fn run_example() -> episent::Result<()> {
    run_into(std::env::temp_dir().join("episent-full-pipeline"))
}

fn run_into(out_dir: PathBuf) -> episent::Result<()> {
    std::fs::create_dir_all(&out_dir).map_err(|e| episent::Error::Io {
        path: out_dir.clone(),
        source: e,
    })?;

    for kind in [ModelKind::Nb, ModelKind::Lr] {
        let (records, meta) = parse_corpus(MINI_COVID_CSV.as_bytes(), Schema::Covid, "mini_covid")?;
        let mut config = PipelineConfig::bundled(Schema::Covid, Domain::Covid);
        config.train.model = kind;
        let run = run_on_records(records, meta, &config)?;
        println!(
            "{kind:?}: {} train / {} test, {} features, accuracy {:.3}, macro F1 {:.3}",
            run.trained.model.n_train,
            run.trained.model.n_test,
            run.trained.vocabulary.len(),
            run.report.accuracy,
            run.report.macro_avg.f1
        );
        let dir = out_dir.join(format!("{kind:?}").to_lowercase());
        std::fs::create_dir_all(&dir).map_err(|e| episent::Error::Io {
            path: dir.clone(),
            source: e,
        })?;
        run.write_artifacts(&dir)?;
        println!("  artifacts in {}", dir.display());
    }
    Ok(())
}

fn main() -> episent::Result<()> {
    match std::env::args().nth(1) {
        Some(dir) => run_into(PathBuf::from(dir)),
        None => run_example(),
    }
}
