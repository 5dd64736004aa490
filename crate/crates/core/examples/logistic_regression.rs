use episent::classify::{train_lr, DenseFixture, LrConfig};

pub fn run_example() -> episent::Result<()> {
    let fixture = DenseFixture::separable();
    let matrix = fixture.matrix()?;
    let labels = fixture.labels();
    let config = LrConfig {
        learning_rate: 0.5,
        epochs: 500,
        ..LrConfig::default()
    };
    let trained = train_lr(&matrix, &labels, &config)?;
    let history = &trained.loss_history;
    println!(
        "loss {:.4} -> {:.4} over {} epochs",
        history[0],
        history[history.len() - 1],
        config.epochs
    );
    for (point, row) in fixture.points.iter().zip(&matrix.rows) {
        let (label, probs) = trained.model.predict(row);
        let probs: Vec<String> = probs.iter().map(|p| format!("{p:.3}")).collect();
        println!(
            "  {:?} gold {} pred {} [{}]",
            point.x,
            point.label,
            label,
            probs.join(", ")
        );
    }
    Ok(())
}

fn main() -> episent::Result<()> {
    run_example()
}
