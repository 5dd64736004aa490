//! The `episent` command line. Each subcommand reads files, runs one stage
//! and writes its artifact to `--output` (or stdout).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analytics::{
    bundled_demographics, cfr, compare_corpora, demographic_mentions, parse_category_lexicons, sentiment_distribution,
    word_frequency, wordcloud_csv, wordcloud_weights,
};
use crate::classify::{LrConfig, SplitSpec};
use crate::corpus::{load_corpus, RawRecord, Schema};
use crate::error::{Error, Result};
use crate::jsonl;
use crate::lexicon::{label_documents, label_from_probs, KeywordLexicon, LabeledItem};
use crate::pipeline::{self, pretty_json, IdfFit, ModelFile, ModelKind, TrainConfig};
use crate::resources;
use crate::sentiment::{Domain, SentimentLabel};
use crate::textprep::{CleanDocument, PrepConfig, PrepFlags, TokenView};
use crate::tfidf::Vocabulary;

#[derive(Debug, Parser)]
#[command(
    name = "episent",
    version,
    about = "Sentiment analytics for outbreak-era tweet corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Load a CSV export into validated records (JSON Lines).
    Ingest(IngestArgs),
    /// Normalize, tokenize, stem and lemmatize records into documents.
    Preprocess(PreprocessArgs),
    /// Assign sentiment labels from the lexicon or from model probabilities.
    Label(LabelArgs),
    /// Fit TF-IDF features and a classifier on the training split.
    Train(TrainArgs),
    /// Score a trained model on its held-out split.
    Evaluate(EvaluateArgs),
    /// Corpus exploration: term frequencies, word clouds, label shares.
    Analyze(AnalyzeArgs),
    /// Compare the label distributions of two corpora.
    Compare(CompareArgs),
    /// Case fatality rate from death and case counts.
    Cfr(CfrArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SchemaArg {
    Covid,
    Mpox,
}

impl From<SchemaArg> for Schema {
    fn from(s: SchemaArg) -> Self {
        match s {
            SchemaArg::Covid => Schema::Covid,
            SchemaArg::Mpox => Schema::Mpox,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DomainArg {
    Covid,
    Mpox,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Self {
        match d {
            DomainArg::Covid => Domain::Covid,
            DomainArg::Mpox => Domain::Mpox,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ViewArg {
    Tokens,
    Stems,
    Lemmas,
}

impl From<ViewArg> for TokenView {
    fn from(v: ViewArg) -> Self {
        match v {
            ViewArg::Tokens => TokenView::Tokens,
            ViewArg::Stems => TokenView::Stems,
            ViewArg::Lemmas => TokenView::Lemmas,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LabelArg {
    Positive,
    Negative,
    Neutral,
}

impl From<LabelArg> for SentimentLabel {
    fn from(l: LabelArg) -> Self {
        match l {
            LabelArg::Positive => SentimentLabel::Positive,
            LabelArg::Negative => SentimentLabel::Negative,
            LabelArg::Neutral => SentimentLabel::Neutral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PrepStep {
    Lowercase,
    Urls,
    Mentions,
    Hashtags,
    Numerals,
    Punctuation,
    Emojis,
    Stopwords,
    Stem,
    Lemmatize,
}

#[derive(Debug, Args)]
struct IngestArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    schema: SchemaArg,
    /// Records as JSON Lines; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Corpus summary (record count, dropped rows, date range) as JSON.
    #[arg(long)]
    meta: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PreprocessArgs {
    /// Records JSON Lines, or a CSV export when --schema is given.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    schema: Option<SchemaArg>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Disable one preprocessing step (repeatable).
    #[arg(long = "skip", value_enum)]
    skip: Vec<PrepStep>,
    /// Stopword list, one word per line.
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Emoji map, `emoji<TAB>name` per line.
    #[arg(long)]
    emoji_map: Option<PathBuf>,
    /// Lemma table, `form<TAB>lemma` per line.
    #[arg(long)]
    lemmas: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Lexicon,
    Probs,
}

#[derive(Debug, Args)]
struct LabelArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long, value_enum)]
    domain: DomainArg,
    /// Documents JSON Lines (lexicon) or `{id, p_neg, p_neu, p_pos}` lines (probs).
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Base polarity lexicon, `word<TAB>score` per line.
    #[arg(long)]
    base_lexicon: Option<PathBuf>,
    /// Domain keywords, `term<TAB>positive|negative` per line.
    #[arg(long)]
    keywords: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Nb,
    Lr,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdfFitArg {
    Train,
    All,
}

#[derive(Debug, Args)]
struct TrainArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    docs: PathBuf,
    #[arg(long)]
    labels: PathBuf,
    /// Model file (JSON).
    #[arg(long)]
    output: PathBuf,
    /// Vocabulary file (JSON).
    #[arg(long)]
    vocab_output: PathBuf,
    /// Training TF-IDF rows as JSON Lines.
    #[arg(long)]
    matrix_output: Option<PathBuf>,
    /// Per-epoch training loss (logistic regression) as JSON.
    #[arg(long)]
    loss_output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "stems")]
    features: ViewArg,
    #[arg(long, default_value_t = 5000)]
    max_features: usize,
    #[arg(long, default_value_t = 0.2)]
    test_fraction: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Documents the vocabulary and IDF are fitted on.
    #[arg(long, value_enum, default_value = "train")]
    fit_idf_on: IdfFitArg,
    /// Naive Bayes smoothing.
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    #[arg(long, default_value_t = 0.1)]
    learning_rate: f64,
    #[arg(long, default_value_t = 1000)]
    epochs: usize,
    #[arg(long, default_value_t = 1e-4)]
    l2: f64,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    vocab: PathBuf,
    #[arg(long)]
    docs: PathBuf,
    #[arg(long)]
    labels: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(subcommand)]
    kind: AnalyzeKind,
}

#[derive(Debug, Subcommand)]
enum AnalyzeKind {
    /// Most frequent terms.
    Freq {
        #[arg(long)]
        docs: PathBuf,
        #[arg(long, value_enum, default_value = "tokens")]
        features: ViewArg,
        #[arg(long, default_value_t = 20)]
        top_k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Relative term weights for word-cloud rendering.
    Cloud {
        #[arg(long)]
        docs: PathBuf,
        #[arg(long, value_enum, default_value = "tokens")]
        features: ViewArg,
        /// Labels file, needed with --label.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Only documents carrying this label.
        #[arg(long, value_enum)]
        label: Option<LabelArg>,
        #[arg(long, value_enum, default_value = "json")]
        format: CloudFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Label counts and percentages.
    Dist {
        /// Labels JSON Lines.
        #[arg(long, required_unless_present = "records", conflicts_with = "records")]
        labels: Option<PathBuf>,
        /// Records JSON Lines; uses the sentiment column shipped with the corpus.
        #[arg(long)]
        records: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Keyword mentions per demographic category.
    Mentions {
        #[arg(long)]
        docs: PathBuf,
        #[arg(long, value_enum, default_value = "tokens")]
        features: ViewArg,
        /// Category table, `term<TAB>category` per line.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CloudFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[arg(long)]
    left: PathBuf,
    #[arg(long)]
    right: PathBuf,
    #[arg(long)]
    left_name: Option<String>,
    #[arg(long)]
    right_name: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CfrArgs {
    #[arg(long)]
    deaths: u64,
    #[arg(long)]
    cases: u64,
}

/// Runs the command line with process stdout/stderr. Returns the exit code:
/// 0 on success, 1 on a runtime error, 2 on a usage error.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => pipeline::write_text(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e)),
    }
}

fn stem_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn views(docs: &[CleanDocument], view: ViewArg) -> Vec<&[String]> {
    let view = TokenView::from(view);
    docs.iter().map(|d| d.view(view)).collect()
}

fn labels_only(items: &[LabeledItem]) -> Vec<SentimentLabel> {
    items.iter().map(|l| l.label).collect()
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Ingest(a) => {
            let (records, meta) = load_corpus(&a.input, a.schema.into())?;
            log::info!(
                "{}: {} records, {} dropped",
                meta.name,
                meta.record_count,
                meta.dropped_missing
            );
            if let Some(p) = &a.meta {
                pipeline::write_text(p, &pretty_json(&meta)?)?;
            }
            emit(out, a.output.as_deref(), &jsonl::to_string(&records)?)
        }
        Command::Preprocess(a) => {
            let records: Vec<RawRecord> = match a.schema {
                Some(schema) => load_corpus(&a.input, schema.into())?.0,
                None => jsonl::read(&a.input)?,
            };
            let mut flags = PrepFlags::default();
            for step in &a.skip {
                match step {
                    PrepStep::Lowercase => flags.lowercase = false,
                    PrepStep::Urls => flags.strip_urls = false,
                    PrepStep::Mentions => flags.strip_mentions = false,
                    PrepStep::Hashtags => flags.strip_hashtags = false,
                    PrepStep::Numerals => flags.strip_numeral_words = false,
                    PrepStep::Punctuation => flags.strip_punctuation = false,
                    PrepStep::Emojis => flags.expand_emojis = false,
                    PrepStep::Stopwords => flags.drop_stopwords = false,
                    PrepStep::Stem => flags.do_stem = false,
                    PrepStep::Lemmatize => flags.do_lemmatize = false,
                }
            }
            let config = PrepConfig::with_overrides(
                flags,
                a.stopwords.as_deref(),
                a.emoji_map.as_deref(),
                a.lemmas.as_deref(),
            )?;
            let docs = pipeline::preprocess_records(&records, &config);
            emit(out, a.output.as_deref(), &jsonl::to_string(&docs)?)
        }
        Command::Label(a) => {
            let domain = Domain::from(a.domain);
            let labels = match a.method {
                MethodArg::Lexicon => {
                    let lexicon = KeywordLexicon::with_overrides(a.base_lexicon.as_deref(), a.keywords.as_deref())?;
                    let docs: Vec<CleanDocument> = jsonl::read(&a.input)?;
                    label_documents(&docs, &lexicon, domain)
                }
                MethodArg::Probs => label_from_probs(&a.input, domain)?,
            };
            emit(out, a.output.as_deref(), &jsonl::to_string(&labels)?)
        }
        Command::Train(a) => {
            let docs: Vec<CleanDocument> = jsonl::read(&a.docs)?;
            let labels: Vec<LabeledItem> = jsonl::read(&a.labels)?;
            let config = TrainConfig {
                model: match a.model {
                    ModelArg::Nb => ModelKind::Nb,
                    ModelArg::Lr => ModelKind::Lr,
                },
                view: a.features.into(),
                max_features: a.max_features,
                split: SplitSpec {
                    test_fraction: a.test_fraction,
                    seed: a.seed,
                },
                idf_fit: match a.fit_idf_on {
                    IdfFitArg::Train => IdfFit::Train,
                    IdfFitArg::All => IdfFit::All,
                },
                alpha: a.alpha,
                lr: LrConfig {
                    learning_rate: a.learning_rate,
                    epochs: a.epochs,
                    l2_penalty: a.l2,
                    seed: a.seed,
                },
            };
            let trained = pipeline::train(&docs, &labels, &config)?;
            trained.model.save(&a.output)?;
            trained.vocabulary.save(&a.vocab_output)?;
            if let Some(p) = &a.matrix_output {
                jsonl::write(p, &trained.train_matrix.rows)?;
            }
            if let Some(p) = &a.loss_output {
                pipeline::write_text(p, &pretty_json(&trained.loss_history)?)?;
            }
            Ok(())
        }
        Command::Evaluate(a) => {
            let model = ModelFile::load(&a.model)?;
            let vocab = Vocabulary::load(&a.vocab)?;
            let docs: Vec<CleanDocument> = jsonl::read(&a.docs)?;
            let labels: Vec<LabeledItem> = jsonl::read(&a.labels)?;
            let report = pipeline::evaluate_model(&model, &vocab, &docs, &labels)?;
            emit(out, a.output.as_deref(), &pretty_json(&report)?)
        }
        Command::Analyze(a) => analyze(a.kind, out),
        Command::Compare(a) => {
            let left: Vec<LabeledItem> = jsonl::read(&a.left)?;
            let right: Vec<LabeledItem> = jsonl::read(&a.right)?;
            let left_name = a.left_name.unwrap_or_else(|| stem_name(&a.left));
            let right_name = a.right_name.unwrap_or_else(|| stem_name(&a.right));
            let report = compare_corpora(&labels_only(&left), &labels_only(&right), (&left_name, &right_name))?;
            emit(out, a.output.as_deref(), &pretty_json(&report)?)
        }
        Command::Cfr(a) => emit(out, None, &pretty_json(&cfr(a.deaths, a.cases)?)?),
    }
}

#[derive(Serialize)]
struct TermCount {
    term: String,
    count: u64,
}

fn analyze(kind: AnalyzeKind, out: &mut dyn Write) -> Result<()> {
    match kind {
        AnalyzeKind::Freq {
            docs,
            features,
            top_k,
            output,
        } => {
            let docs: Vec<CleanDocument> = jsonl::read(&docs)?;
            let ranked: Vec<TermCount> = word_frequency(&views(&docs, features), top_k)
                .into_iter()
                .map(|(term, count)| TermCount { term, count })
                .collect();
            emit(out, output.as_deref(), &pretty_json(&ranked)?)
        }
        AnalyzeKind::Cloud {
            docs,
            features,
            labels,
            label,
            format,
            output,
        } => {
            let docs: Vec<CleanDocument> = jsonl::read(&docs)?;
            let (docs, doc_labels) = match &labels {
                Some(path) => {
                    let items: Vec<LabeledItem> = jsonl::read(path)?;
                    let (d, l) = pipeline::join_labels(&docs, &items);
                    (d.into_iter().cloned().collect(), Some(l))
                }
                None => (docs, None),
            };
            let weights = wordcloud_weights(&views(&docs, features), doc_labels.as_deref(), label.map(Into::into))?;
            let text = match format {
                CloudFormat::Json => pretty_json(&weights)?,
                CloudFormat::Csv => wordcloud_csv(&weights)?,
            };
            emit(out, output.as_deref(), &text)
        }
        AnalyzeKind::Dist {
            labels,
            records,
            output,
        } => {
            let labels: Vec<SentimentLabel> = match (labels, records) {
                (Some(path), _) => labels_only(&jsonl::read(&path)?),
                (None, Some(path)) => {
                    let records: Vec<RawRecord> = jsonl::read(&path)?;
                    records.iter().filter_map(|r| r.provided_sentiment).collect()
                }
                (None, None) => unreachable!("clap requires one of --labels, --records"),
            };
            emit(out, output.as_deref(), &pretty_json(&sentiment_distribution(&labels)?)?)
        }
        AnalyzeKind::Mentions {
            docs,
            features,
            lexicon,
            output,
        } => {
            let docs: Vec<CleanDocument> = jsonl::read(&docs)?;
            let lexicons = match lexicon {
                Some(p) => parse_category_lexicons(&resources::read_text(&p)?)?,
                None => bundled_demographics(),
            };
            let counts = demographic_mentions(&views(&docs, features), &lexicons);
            emit(out, output.as_deref(), &pretty_json(&counts)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("episent").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn cfr_prints_json() {
        let (code, out, _) = run_capture(&["cfr", "--deaths", "5", "--cases", "100"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["cfr_percent"], 5.0);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["cfr", "--deaths", "5"]).0, 2);
        assert_eq!(run_capture(&["cfr", "--deaths", "1", "--cases", "0"]).0, 1);
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("preprocess"));
    }
}
