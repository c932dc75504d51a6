use std::path::Path;

use functor_hh::fixtures;

#[test]
fn compiled_fixtures_match_the_files_on_disk() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (name, text) in fixtures::FILES {
        let disk = std::fs::read_to_string(dir.join(name)).unwrap();
        assert_eq!(&disk, text, "{name}");
    }
}

#[test]
fn every_file_in_the_directory_is_listed_or_an_algebra() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let listed = fixtures::FILES.iter().any(|(n, _)| *n == name);
        assert!(listed || name.ends_with("_algebra.json"), "{name}");
    }
}
