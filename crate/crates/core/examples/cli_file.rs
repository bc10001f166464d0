// Driving the command-line front end in-process from an instance file.
//
// ```text
// cargo run --example cli_file
// ```

use clap::Parser;

use corona::cli::{self, Cli, FunctionEntry, InstanceFile, Mode, ZeroEntry};
use corona::numcore::{Poly, RationalFn};

pub fn run() -> std::io::Result<Vec<cli::Outcome>> {
    let file = InstanceFile {
        blaschke: vec![ZeroEntry { zero: [0.0, 0.0], mult: 2 }],
        functions: vec![
            FunctionEntry::from_rational(&RationalFn::from_poly(Poly::real(&[0.0, 0.0, 1.0]))),
            FunctionEntry::from_rational(&RationalFn::from_poly(Poly::real(&[1.0, 0.0, 0.0, -1.0]))),
        ],
        delta_claimed: Some(0.5),
        mode: Some(Mode::Solve),
    };
    let dir = std::env::temp_dir().join(format!("corona-cli-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("worked.json");
    std::fs::write(&path, serde_json::to_string_pretty(&file).expect("instance serializes"))?;
    let path = path.to_str().expect("utf-8 temp path");

    let outcomes = ["run", "check", "norms"]
        .iter()
        .map(|cmd| cli::execute(&Cli::parse_from(["corona", cmd, path])))
        .collect();
    std::fs::remove_dir_all(&dir)?;
    Ok(outcomes)
}

fn main() -> std::io::Result<()> {
    for o in run()? {
        println!("exit {}", o.code);
        print!("{}", o.report);
    }
    Ok(())
}
