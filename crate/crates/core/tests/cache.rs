use swapmagic::constructions::cocktail::{load_cocktail, supermagic_cocktail, DEFAULT_BUDGET};
use swapmagic::constructions::set_cache_dir;

#[test]
fn disk_cache_is_written_and_reloadable() {
    let dir = tempfile::tempdir().unwrap();
    set_cache_dir(Some(dir.path().to_path_buf()));
    let c = supermagic_cocktail(5, DEFAULT_BUDGET).unwrap();
    let path = dir.path().join("cocktail-q5.json");
    assert!(path.exists());
    assert_eq!(load_cocktail(&path).unwrap(), c);
    set_cache_dir(None);
}
