//! Running check groups through the library and emitting JSON lines, as
//! `modpi report --format structured` does.
//!
//! ```text
//! cargo run --release --example structured_report
//! ```

use modpi::cli::{load_data, run_checks, Opts, Target};

fn main() {
    let data = load_data(None).expect("data");
    eprintln!("data: {}", data.source);
    let opts = Opts { prec: 128, ..Opts::default() };
    for target in [Target::Arith, Target::Singular] {
        for r in run_checks(target, &data, &opts).unwrap() {
            println!("{}", r.to_json_line());
        }
    }
}
