//! Running a script from Rust, with text and JSON output. Pass a path to run
//! a file instead of the built-in script.

use reeskit::dsl::run_source;

const DEFAULT: &str = "
ring A = QQ[x] / (x^2);
ring B = QQ[x, S] / (x^2, x*S);
map f : A -> B { x -> x };
module M = coker A [[x]];
rees M;
compare M via f;
";

fn main() {
    let src = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable script"),
        None => DEFAULT.to_string(),
    };
    let ex = run_source(&src);
    print!("{}", ex.to_text());
    println!("{}", serde_json::to_string_pretty(&ex.to_json()).expect("serializable"));
    std::process::exit(ex.exit_code());
}
