//! Stage functions shared by the command-line front end and in-process
//! runs, plus the artifact formats passed between stages.
//!
//! Every artifact is rendered through the functions here so a chain of
//! separate invocations produces the same bytes as one in-process run.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{split_indices, train_lr, train_nb, Classifier, LrConfig, SplitSpec};
use crate::corpus::{load_corpus, CorpusMeta, RawRecord, Schema};
use crate::error::{Error, Result};
use crate::lexicon::{label_documents, KeywordLexicon, LabeledItem};
use crate::metrics::{evaluate, EvalReport};
use crate::sentiment::{Domain, SentimentLabel};
use crate::textprep::{preprocess, CleanDocument, PrepConfig, TokenView};
use crate::tfidf::{build_vocabulary, transform, DocTermMatrix, Vocabulary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Nb,
    Lr,
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nb" => Ok(ModelKind::Nb),
            "lr" => Ok(ModelKind::Lr),
            other => Err(Error::Validation(format!("unknown model `{other}`"))),
        }
    }
}

/// Which documents the IDF statistics and vocabulary are fitted on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdfFit {
    #[default]
    Train,
    All,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub model: ModelKind,
    pub view: TokenView,
    pub max_features: usize,
    pub split: SplitSpec,
    pub idf_fit: IdfFit,
    pub alpha: f64,
    pub lr: LrConfig,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            model: ModelKind::Nb,
            view: TokenView::Stems,
            max_features: 5000,
            split: SplitSpec::default(),
            idf_fit: IdfFit::Train,
            alpha: 1.0,
            lr: LrConfig::default(),
        }
    }
}

/// Saved classifier with the vocabulary digest it was trained against.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub classifier: Classifier,
    pub vocabulary_digest: String,
    pub config: TrainConfig,
    pub n_train: usize,
    pub n_test: usize,
}

impl ModelFile {
    pub fn check_vocabulary(&self, vocab: &Vocabulary) -> Result<()> {
        let digest = vocab.digest();
        if digest != self.vocabulary_digest {
            return Err(Error::DigestMismatch {
                model: self.vocabulary_digest.clone(),
                vocab: digest,
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)? + "\n")
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        write_text(path, &self.to_json()?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(serde_json::from_str(&text)?)
    }
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn pretty_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn preprocess_records(records: &[RawRecord], config: &PrepConfig) -> Vec<CleanDocument> {
    records.iter().map(|r| preprocess(r, config)).collect()
}

/// Pairs documents with labels by id, in document order. Documents without
/// a label are skipped.
pub fn join_labels<'a>(
    docs: &'a [CleanDocument],
    labels: &[LabeledItem],
) -> (Vec<&'a CleanDocument>, Vec<SentimentLabel>) {
    let by_id: HashMap<&str, SentimentLabel> = labels.iter().map(|l| (l.id.as_str(), l.label)).collect();
    let mut skipped = 0usize;
    let mut out_docs = Vec::new();
    let mut out_labels = Vec::new();
    for d in docs {
        match by_id.get(d.id.as_str()) {
            Some(&l) => {
                out_docs.push(d);
                out_labels.push(l);
            }
            None => skipped += 1,
        }
    }
    if skipped > 0 {
        log::warn!("{skipped} documents have no label and were skipped");
    }
    (out_docs, out_labels)
}

fn views<'a>(docs: &[&'a CleanDocument], idx: &[usize], view: TokenView) -> Vec<&'a [String]> {
    idx.iter().map(|&i| docs[i].view(view)).collect()
}

pub struct Trained {
    pub model: ModelFile,
    pub vocabulary: Vocabulary,
    pub train_matrix: DocTermMatrix,
    /// Per-epoch loss for logistic regression, empty for Naive Bayes.
    pub loss_history: Vec<f64>,
}

pub fn train(docs: &[CleanDocument], labels: &[LabeledItem], config: &TrainConfig) -> Result<Trained> {
    let (docs, gold) = join_labels(docs, labels);
    let split = split_indices(docs.len(), &config.split)?;
    let train_docs = views(&docs, &split.train, config.view);
    let vocabulary = match config.idf_fit {
        IdfFit::Train => build_vocabulary(&train_docs, config.max_features)?,
        IdfFit::All => {
            let all: Vec<&[String]> = docs.iter().map(|d| d.view(config.view)).collect();
            build_vocabulary(&all, config.max_features)?
        }
    };
    let train_matrix = transform(&train_docs, &vocabulary);
    let train_labels: Vec<SentimentLabel> = split.train.iter().map(|&i| gold[i]).collect();
    let (classifier, loss_history) = match config.model {
        ModelKind::Nb => (
            Classifier::Nb(train_nb(&train_matrix, &train_labels, config.alpha)?),
            Vec::new(),
        ),
        ModelKind::Lr => {
            let t = train_lr(&train_matrix, &train_labels, &config.lr)?;
            (Classifier::Lr(t.model), t.loss_history)
        }
    };
    Ok(Trained {
        model: ModelFile {
            classifier,
            vocabulary_digest: vocabulary.digest(),
            config: config.clone(),
            n_train: split.train.len(),
            n_test: split.test.len(),
        },
        vocabulary,
        train_matrix,
        loss_history,
    })
}

/// Scores the model on the held-out part of the split recorded in the model.
pub fn evaluate_model(
    model: &ModelFile,
    vocab: &Vocabulary,
    docs: &[CleanDocument],
    labels: &[LabeledItem],
) -> Result<EvalReport> {
    model.check_vocabulary(vocab)?;
    let (docs, gold) = join_labels(docs, labels);
    let split = split_indices(docs.len(), &model.config.split)?;
    if split.test.is_empty() {
        return Err(Error::Validation("test split is empty".into()));
    }
    let test_docs = views(&docs, &split.test, model.config.view);
    let matrix = transform(&test_docs, vocab);
    let pred: Vec<SentimentLabel> = matrix.rows.iter().map(|r| model.classifier.predict(r)).collect();
    let test_gold: Vec<SentimentLabel> = split.test.iter().map(|&i| gold[i]).collect();
    let classes: Vec<SentimentLabel> = SentimentLabel::ALL
        .into_iter()
        .filter(|c| model.classifier.classes().contains(c) || test_gold.contains(c) || pred.contains(c))
        .collect();
    evaluate(&test_gold, &pred, &classes)
}

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub schema: Schema,
    pub domain: Domain,
    pub prep: PrepConfig,
    pub lexicon: KeywordLexicon,
    pub train: TrainConfig,
}

impl PipelineConfig {
    pub fn bundled(schema: Schema, domain: Domain) -> Self {
        PipelineConfig {
            schema,
            domain,
            prep: PrepConfig::bundled(),
            lexicon: KeywordLexicon::bundled(),
            train: TrainConfig::default(),
        }
    }
}

/// Everything one end-to-end run produces.
pub struct PipelineRun {
    pub records: Vec<RawRecord>,
    pub meta: CorpusMeta,
    pub docs: Vec<CleanDocument>,
    pub labels: Vec<LabeledItem>,
    pub trained: Trained,
    pub report: EvalReport,
}

/// Ingest, preprocess, lexicon-label, train and evaluate in one call.
pub fn run_pipeline(input: &Path, config: &PipelineConfig) -> Result<PipelineRun> {
    let (records, meta) = load_corpus(input, config.schema)?;
    run_on_records(records, meta, config)
}

pub fn run_on_records(records: Vec<RawRecord>, meta: CorpusMeta, config: &PipelineConfig) -> Result<PipelineRun> {
    let docs = preprocess_records(&records, &config.prep);
    let labels = label_documents(&docs, &config.lexicon, config.domain);
    let trained = train(&docs, &labels, &config.train)?;
    let report = evaluate_model(&trained.model, &trained.vocabulary, &docs, &labels)?;
    Ok(PipelineRun {
        records,
        meta,
        docs,
        labels,
        trained,
        report,
    })
}

impl PipelineRun {
    /// Writes the same files the individual stages write:
    /// `records.jsonl`, `meta.json`, `docs.jsonl`, `labels.jsonl`,
    /// `model.json`, `vocab.json`, `report.json`.
    pub fn write_artifacts(&self, dir: &Path) -> Result<()> {
        use crate::jsonl;
        jsonl::write(&dir.join("records.jsonl"), &self.records)?;
        write_text(&dir.join("meta.json"), &pretty_json(&self.meta)?)?;
        jsonl::write(&dir.join("docs.jsonl"), &self.docs)?;
        jsonl::write(&dir.join("labels.jsonl"), &self.labels)?;
        self.trained.model.save(&dir.join("model.json"))?;
        self.trained.vocabulary.save(&dir.join("vocab.json"))?;
        write_text(&dir.join("report.json"), &pretty_json(&self.report)?)
    }
}
