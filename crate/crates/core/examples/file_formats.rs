//! Reading Seifert data from JSON and running a job through the command
//! line front end in-process.
//!
//! ```bash
//! cargo run --example file_formats
//! ```

use diskknot::cli::{run, Format, JobConfig};
use diskknot::io::parse_seifert;
use clap::Parser;

fn main() {
    let text = r#"{"n_parity": "even", "theta": [[1, -1], [2, 1]]}"#;
    let s = parse_seifert(text).expect("well formed");
    println!("read a {}x{} matrix, n {}", s.dim(), s.dim(), s.parity.as_str());
    println!("written back: {}", serde_json::to_string(&s).expect("serialisable"));

    let bad = r#"{"n_parity": "odd", "theta": [[0.5]]}"#;
    println!("floats rejected: {}", parse_seifert(bad).unwrap_err());

    let dir = std::env::temp_dir().join("diskknot-example");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("disk.json");
    std::fs::write(&path, text).expect("write");
    let cfg = JobConfig::parse_from(["diskknot", "farber-levine", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(cfg.format, Format::Json);
    let out = run(&cfg);
    println!("exit {}", out.status);
    print!("{}", out.report);
}
