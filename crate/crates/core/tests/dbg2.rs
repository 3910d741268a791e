#[test]
fn dbg_pair() {
    use unipoly::geometry::*;
    let trace = trace_boundary::<f64>(21, 2048).unwrap();
    let curve = build_closed_curve(&trace).unwrap();
    let pts = curve.points();
    let nn = pts.len();
    let orient = |a: unipoly::ComplexPoint64, b: unipoly::ComplexPoint64, c: unipoly::ComplexPoint64| -> (i8, f64) {
        let v = (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re);
        let o = if v > 1e-14 { 1 } else if v < -1e-14 { -1 } else { 0 };
        (o, v)
    };
    let inter = |a1, a2, b1, b2| -> bool {
        let (o1, _) = orient(a1, a2, b1);
        let (o2, _) = orient(a1, a2, b2);
        let (o3, _) = orient(b1, b2, a1);
        let (o4, _) = orient(b1, b2, a2);
        if o1 != o2 && o3 != o4 { return true; }
        let inb = |p: unipoly::ComplexPoint64, a: unipoly::ComplexPoint64, b: unipoly::ComplexPoint64| {
            p.re >= a.re.min(b.re) && p.re <= a.re.max(b.re) && p.im >= a.im.min(b.im) && p.im <= a.im.max(b.im)
        };
        (o1 == 0 && inb(b1, a1, a2)) || (o2 == 0 && inb(b2, a1, a2)) || (o3 == 0 && inb(a1, b1, b2)) || (o4 == 0 && inb(a2, b1, b2))
    };
    let mut found = 0;
    for i in 0..nn {
        let (a1, a2) = (pts[i], pts[(i + 1) % nn]);
        for j in i+1..nn {
            if (i+1)%nn == j || (j+1)%nn == i { continue; }
            let (b1, b2) = (pts[j], pts[(j+1)%nn]);
            // quick box reject
            if a1.re.max(a2.re) + 1e-6 < b1.re.min(b2.re) || b1.re.max(b2.re) + 1e-6 < a1.re.min(a2.re) { continue; }
            if a1.im.max(a2.im) + 1e-6 < b1.im.min(b2.im) || b1.im.max(b2.im) + 1e-6 < a1.im.min(a2.im) { continue; }
            if inter(a1, a2, b1, b2) {
                found += 1;
                if found <= 3 {
                    eprintln!("pair ({i},{j}) thetas {} {}", curve.thetas()[i], curve.thetas()[j]);
                    eprintln!("  a1=({:.3e},{:.10}) a2=({:.3e},{:.10})", a1.re, a1.im, a2.re, a2.im);
                    eprintln!("  b1=({:.3e},{:.10}) b2=({:.3e},{:.10})", b1.re, b1.im, b2.re, b2.im);
                    let os = [orient(a1,a2,b1), orient(a1,a2,b2), orient(b1,b2,a1), orient(b1,b2,a2)];
                    eprintln!("  orients {:?}", os);
                }
            }
        }
    }
    eprintln!("total flagged pairs: {found}");
}
