//! Parse a group file, analyse each group through the cache, and round-trip
//! the JSON bundle.

use vanishkit::toolkit::{parse_group_file, AnalysisBundle, Cache};

const FILE: &str = "\
# two small groups
group D12
degree 6
gen (1,2,3,4,5,6)
gen (2,6)(3,5)

group A4xC2
degree 6
gen (1,2,3)
gen (2,3,4)
gen (5,6)
";

fn main() -> vanishkit::Result<()> {
    let dir = std::env::temp_dir().join("vanishkit-example-cache");
    let cache = Cache::new(&dir);
    for def in parse_group_file(FILE)? {
        let bundle = cache.get_or_compute(&def, 10_000, false)?;
        let json = bundle.to_json()?;
        assert_eq!(AnalysisBundle::from_json(&json)?, bundle);
        println!(
            "{}: order {}, vanishing sizes {:?}, cached at {}",
            def.name,
            bundle.order,
            bundle.vanishing.vanishing_class_sizes,
            cache.path_for(&def).display()
        );
    }
    Ok(())
}
