//! Drives the command-line interface in-process on the bundled fixture files.

use std::path::Path;

use functor_hh::cli::run;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let path = |name: &str| dir.join(name).display().to_string();
    let commands: Vec<Vec<String>> = vec![
        vec!["hh".into(), "--monoid".into(), path("dual.json"), "--max-degree".into(), "3".into()],
        vec!["separability".into(), "--monoid".into(), path("m2.json")],
        vec!["validate".into(), path("broken_category.json")],
        vec!["oracle".into(), "--algebra".into(), path("dual_algebra.json")],
    ];
    for args in commands {
        println!("$ functor-hh {}", args.join(" "));
        let out = run(std::iter::once("functor-hh".to_string()).chain(args));
        print!("{}{}", out.stdout, out.stderr);
        println!("(exit {})\n", out.code);
    }
}
