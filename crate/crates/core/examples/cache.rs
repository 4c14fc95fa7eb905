//! Fixed-point cache: first call writes, second call reads.
use eqloc::hilb::FixedPointCache;
use eqloc::toric::{make_surface, SurfaceName};

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join("eqloc-cache-example");
    let cache = FixedPointCache::new(&dir);
    let s = make_surface(SurfaceName::P2);
    for _ in 0..2 {
        let (pts, hit) = cache.load_or_generate(&s, 4)?;
        println!("{} points, cached {hit}", pts.len());
    }
    print!("{}", std::fs::read_to_string(cache.path(SurfaceName::P2, 4))?.lines().take(3).map(|l| format!("{l}\n")).collect::<String>());
    Ok(())
}
