use truncated_reflection::runner::dump_level;

#[test]
fn level_dumps_match_fixtures() {
    let fixtures = [
        include_str!("../fixtures/level0.txt"),
        include_str!("../fixtures/level1.txt"),
        include_str!("../fixtures/level2.txt"),
    ];
    for (n, expected) in fixtures.iter().enumerate() {
        assert_eq!(&dump_level(n).unwrap(), expected, "level {n}");
    }
}
