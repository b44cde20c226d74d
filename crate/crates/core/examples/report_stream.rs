//! Drive the runner from code and collect the records as JSON lines.

use truncated_reflection::report::Status;
use truncated_reflection::runner::{run, Command, Options};

fn main() {
    let mut lines = Vec::new();
    let mut failures = 0;
    run(&Command::Hahn, &Options::default(), &mut |r| {
        if r.status == Status::Fail {
            failures += 1;
        }
        lines.push(r.to_json());
    });
    for l in lines.iter().take(3) {
        println!("{l}");
    }
    println!("... {} records, {failures} failing", lines.len());
    assert_eq!(failures, 0);
}
