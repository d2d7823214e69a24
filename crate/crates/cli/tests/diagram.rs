use partition_lab::maps::ModularDiagram;
use partition_lab_cli::{render_ascii, render_svg, run_with};

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("partition-lab").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

/// `(row, col, label)` for every triangle in an SVG rendering.
fn svg_triangles(svg: &str) -> Vec<(usize, usize, String)> {
    svg.lines()
        .filter(|l| l.starts_with("<polygon class=\"triangle\""))
        .map(|l| {
            let attr = |name: &str| {
                let start = l.find(&format!("{name}=\"")).unwrap() + name.len() + 2;
                l[start..].split('"').next().unwrap().to_string()
            };
            (attr("data-row").parse().unwrap(), attr("data-col").parse().unwrap(), attr("data-label"))
        })
        .collect()
}

fn svg_squares(svg: &str) -> usize {
    svg.lines().filter(|l| l.starts_with("<rect class=\"square\"")).count()
}

#[test]
fn small_example_ascii() {
    let (code, out) = run(&["diagram", "8,5,4,3,1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1.\n## 13\nλ_e: (8,4)\n");
}

#[test]
fn small_example_svg_topology() {
    let (code, svg) = run(&["diagram", "8,5,4,3,1", "--format", "svg"]);
    assert_eq!(code, 0);
    let tri = svg_triangles(&svg);
    // The 1 of the part 5 on the first diagonal cell, then the 1 of the
    // part 1 and the 3 of the part 3 sharing the second.
    assert_eq!(tri, vec![(0, 0, "1".into()), (1, 1, "1".into()), (1, 1, "3".into())]);
    assert_eq!(svg_squares(&svg), 1);
    assert!(svg.contains("λ_e: (8,4)"));
}

#[test]
fn full_square_example() {
    let d = ModularDiagram::new(vec![12, 8, 4], vec![17, 13, 9, 5, 1], vec![19, 15, 11, 7, 3]).unwrap();
    let ascii = render_ascii(&d);
    let lines: Vec<&str> = ascii.lines().collect();
    assert_eq!(lines.len(), 6);
    for (i, line) in lines[..5].iter().enumerate() {
        let cells: Vec<&str> = line.split(' ').collect();
        assert_eq!(cells.len(), 5);
        for (j, c) in cells.iter().enumerate() {
            assert_eq!(*c, if i == j { "13" } else { "##" });
        }
    }
    assert_eq!(lines[5], "λ_e: (12,8,4)");
    let svg = render_svg(&d);
    let tri = svg_triangles(&svg);
    assert_eq!(tri.len(), 10);
    for i in 0..5 {
        assert!(tri.contains(&(i, i, "1".into())) && tri.contains(&(i, i, "3".into())));
    }
    assert_eq!(svg_squares(&svg), 20);
}

#[test]
fn empty_diagram() {
    let (code, out) = run(&["diagram", "()"]);
    assert_eq!(code, 0);
    assert_eq!(out, "λ_e: (none)\n");
    let svg = render_svg(&ModularDiagram::default());
    assert!(svg_triangles(&svg).is_empty());
    assert!(svg.contains("λ_e: (none)"));
}

#[test]
fn rendering_is_deterministic_and_weighted() {
    for spec in ["13,9,7,4,1", "11,3", "16,12,9", "7"] {
        let a = run(&["diagram", spec, "--format", "svg"]).1;
        assert_eq!(a, run(&["diagram", spec, "--format", "svg"]).1);
        // Each square is worth 4, each 1-triangle 1 and each 3-triangle 3.
        let tri: u32 = svg_triangles(&a).iter().map(|(_, _, l)| l.parse::<u32>().unwrap()).sum();
        let evens: u32 = spec.split(',').map(|v| v.parse::<u32>().unwrap()).filter(|v| v % 4 == 0).sum();
        let total: u32 = spec.split(',').map(|v| v.parse::<u32>().unwrap()).sum();
        assert_eq!(4 * svg_squares(&a) as u32 + tri + evens, total, "{spec}");
    }
}

#[test]
fn diagram_json() {
    let (_, out) = run(&["diagram", "12,8,5,4,3,1", "--output", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lambda_e"], serde_json::json!([12, 8, 4]));
    assert_eq!(v["lambda_c1"], serde_json::json!([5, 1]));
    assert_eq!(v["lambda_c3"], serde_json::json!([3]));
}
