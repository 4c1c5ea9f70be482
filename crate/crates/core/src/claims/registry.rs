//! The catalogue of audited statements and the printed values they quote.

use num_bigint::BigInt;

use super::{Check, Claim, ClaimKind, ColumnFormula, Columns, Formula, Section};
use crate::algebra::{fib, lucas, Poly};
use crate::matrix::{Family, FamilyId, ProductPair, SubstitutionMode};

fn f(k: i64) -> BigInt {
    fib(k)
}

fn p(s: &str) -> Poly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad literal {s:?}: {e}"))
}

/// Row of a printed sequence table at fixed `t`.
pub(crate) struct SeqRow {
    pub t: i64,
    pub printed: [i64; 3],
    pub label: &'static str,
    /// Value the label stands for at `n`.
    pub value: fn(i64) -> BigInt,
    /// `(a, b)` when the label is a Lucas number `L_{an+b}`.
    pub lucas: Option<(i64, i64)>,
}

pub(crate) struct FamilyBlock {
    pub family: Family,
    pub general: &'static str,
    pub general_fn: fn(i64) -> Poly,
    /// Values listed in the prose next to the family's definition.
    pub text: [&'static str; 3],
    /// The symbolic `t` row of the sequence table.
    pub symbolic: [&'static str; 3],
    pub rows: [SeqRow; 4],
}

pub(crate) fn family_blocks() -> Vec<FamilyBlock> {
    use Family::*;
    vec![
        FamilyBlock {
            family: C,
            general: "|C_{n,t}|=F_{n+1} t+F_{n}",
            general_fn: |n| Poly::linear(f(n + 1), f(n)),
            text: ["t+1", "2t+1", "3t+2"],
            symbolic: ["t+1", "2t+1", "3t+2"],
            rows: [
                SeqRow {
                    t: -1,
                    printed: [0, -1, -1],
                    label: "-F_{n-1}",
                    value: |n| -f(n - 1),
                    lucas: None,
                },
                SeqRow {
                    t: 0,
                    printed: [1, 1, 2],
                    label: "F_{n}",
                    value: f,
                    lucas: None,
                },
                SeqRow {
                    t: 1,
                    printed: [2, 3, 5],
                    label: "F_{n+2}",
                    value: |n| f(n + 2),
                    lucas: None,
                },
                SeqRow {
                    t: 2,
                    printed: [3, 5, 8],
                    label: "F_{n+3}",
                    value: |n| f(n + 3),
                    lucas: None,
                },
            ],
        },
        FamilyBlock {
            family: D,
            general: "|D_{n,t}|=F_{2n-1} t+F_{2n}",
            general_fn: |n| Poly::linear(f(2 * n - 1), f(2 * n)),
            text: ["t+1", "2t+3", "3t+5"],
            symbolic: ["t+1", "2t+3", "3t+5"],
            rows: [
                SeqRow {
                    t: -1,
                    printed: [0, 1, 2],
                    label: "F_{2n-2}",
                    value: |n| f(2 * n - 2),
                    lucas: None,
                },
                SeqRow {
                    t: 0,
                    printed: [1, 3, 5],
                    label: "F_{2n}",
                    value: |n| f(2 * n),
                    lucas: None,
                },
                SeqRow {
                    t: 1,
                    printed: [2, 5, 8],
                    label: "F_{2n+1}",
                    value: |n| f(2 * n + 1),
                    lucas: None,
                },
                SeqRow {
                    t: 2,
                    printed: [3, 7, 11],
                    label: "L_{2n}",
                    value: |n| 2 * f(2 * n - 1) + f(2 * n),
                    lucas: Some((2, 0)),
                },
            ],
        },
        FamilyBlock {
            family: E,
            general: "|E_{n,t}|=F_{2n-2} t+F_{2n-1}",
            general_fn: |n| Poly::linear(f(2 * n - 2), f(2 * n - 1)),
            text: ["t+1", "2t+3", "3t+5"],
            symbolic: ["t+1", "2t+3", "3t+5"],
            rows: [
                SeqRow {
                    t: -1,
                    printed: [0, 1, 2],
                    label: "F_{2n-3}",
                    value: |n| f(2 * n - 3),
                    lucas: None,
                },
                SeqRow {
                    t: 0,
                    printed: [1, 3, 5],
                    label: "F_{2n-1}",
                    value: |n| f(2 * n - 1),
                    lucas: None,
                },
                SeqRow {
                    t: 1,
                    printed: [2, 5, 8],
                    label: "F_{2n}",
                    value: |n| f(2 * n),
                    lucas: None,
                },
                SeqRow {
                    t: 2,
                    printed: [3, 7, 11],
                    label: "L_{2n-1}",
                    value: |n| 2 * f(2 * n - 2) + f(2 * n - 1),
                    lucas: Some((2, -1)),
                },
            ],
        },
        FamilyBlock {
            family: F,
            general: "|F_{n,t}|=F_{n}+tF_{n+1}",
            general_fn: |n| Poly::linear(f(n + 1), f(n)),
            text: ["t+1", "2t+1", "3t+2"],
            symbolic: ["t+1", "2t+1", "3t+2"],
            rows: [
                SeqRow {
                    t: -1,
                    printed: [0, -1, -1],
                    label: "-F_{n-1}",
                    value: |n| -f(n - 1),
                    lucas: None,
                },
                SeqRow {
                    t: 0,
                    printed: [1, 1, 2],
                    label: "F_{n}",
                    value: f,
                    lucas: None,
                },
                SeqRow {
                    t: 1,
                    printed: [2, 3, 5],
                    label: "F_{n+2}",
                    value: |n| f(n + 2),
                    lucas: None,
                },
                SeqRow {
                    t: 2,
                    printed: [3, 5, 8],
                    label: "F_{n+3}",
                    value: |n| f(n + 3),
                    lucas: None,
                },
            ],
        },
        FamilyBlock {
            family: G,
            general: "|G_{n,t}|=F_{n-2}+tF_{n-1}",
            general_fn: |n| Poly::linear(f(n - 1), f(n - 2)),
            text: ["t+1", "2t+1", "3t+2"],
            symbolic: ["t+1", "2t+1", "3t+2"],
            rows: [
                SeqRow {
                    t: -1,
                    printed: [0, -1, -1],
                    label: "-F_{n-3}",
                    value: |n| -f(n - 3),
                    lucas: None,
                },
                SeqRow {
                    t: 0,
                    printed: [1, 1, 2],
                    label: "F_{n-2}",
                    value: |n| f(n - 2),
                    lucas: None,
                },
                SeqRow {
                    t: 1,
                    printed: [2, 3, 5],
                    label: "F_{n}",
                    value: f,
                    lucas: None,
                },
                SeqRow {
                    t: 2,
                    printed: [3, 5, 8],
                    label: "F_{n+1}",
                    value: |n| f(n + 1),
                    lucas: None,
                },
            ],
        },
        FamilyBlock {
            family: H,
            general: "|H_{n,t}|=F_{2n-1}+tF_{2n-2}",
            general_fn: |n| Poly::linear(f(2 * n - 2), f(2 * n - 1)),
            text: ["t+1", "2t+3", "5t+8"],
            symbolic: ["t+1", "2t+3", "5t+8"],
            rows: [
                SeqRow {
                    t: -1,
                    printed: [0, 1, 3],
                    label: "F_{2n-3}",
                    value: |n| f(2 * n - 3),
                    lucas: None,
                },
                SeqRow {
                    t: 0,
                    printed: [1, 3, 8],
                    label: "F_{2n-1}",
                    value: |n| f(2 * n - 1),
                    lucas: None,
                },
                SeqRow {
                    t: 1,
                    printed: [2, 5, 13],
                    label: "F_{2n}",
                    value: |n| f(2 * n),
                    lucas: None,
                },
                SeqRow {
                    t: 2,
                    printed: [3, 7, 18],
                    label: "L_{2n-1}",
                    value: |n| 2 * f(2 * n - 2) + f(2 * n - 1),
                    lucas: Some((2, -1)),
                },
            ],
        },
        FamilyBlock {
            family: K,
            general: "|K_{n,t}|=F_{2n}+tF_{2n-1}",
            general_fn: |n| Poly::linear(f(2 * n - 1), f(2 * n)),
            text: ["t+1", "2t+3", "5t+8"],
            symbolic: ["t+1", "2t+3", "5t+8"],
            rows: [
                SeqRow {
                    t: -1,
                    printed: [0, 1, 3],
                    label: "F_{2n-2}",
                    value: |n| f(2 * n - 2),
                    lucas: None,
                },
                SeqRow {
                    t: 0,
                    printed: [1, 3, 8],
                    label: "F_{2n}",
                    value: |n| f(2 * n),
                    lucas: None,
                },
                SeqRow {
                    t: 1,
                    printed: [2, 5, 13],
                    label: "F_{2n+1}",
                    value: |n| f(2 * n + 1),
                    lucas: None,
                },
                SeqRow {
                    t: 2,
                    printed: [3, 7, 18],
                    label: "L_{2n}",
                    value: |n| 2 * f(2 * n - 1) + f(2 * n),
                    lucas: Some((2, 0)),
                },
            ],
        },
    ]
}

/// Substituted-column formula as printed, `(n, i) -> |X^i_n|`.
pub(crate) struct ColumnBlock {
    pub family: Family,
    pub formula: &'static str,
    pub formula_fn: fn(i64, i64) -> Poly,
    pub least_column: usize,
    /// Printed cells for `i = 1, 2, 3`.
    pub cells: [&'static str; 3],
}

pub(crate) fn column_blocks() -> Vec<ColumnBlock> {
    vec![
        ColumnBlock {
            family: Family::C,
            formula: "|C_{n,t}^{i}|=tF_{n-i}+F_{n-i-1}",
            formula_fn: |n, i| Poly::linear(f(n - i), f(n - i - 1)),
            least_column: 1,
            cells: ["tF_{n-1}+F_{n-2}", "tF_{n-2}+F_{n-3}", "tF_{n-3}+F_{n-4}"],
        },
        ColumnBlock {
            family: Family::D,
            formula: "|D_{n,t}^{i}|=F_{2(n-i)+1}+tF_{2(n-i)}",
            formula_fn: |n, i| Poly::linear(f(2 * (n - i)), f(2 * (n - i) + 1)),
            least_column: 1,
            cells: [
                "F_{2n-1}+tF_{2n-2}",
                "F_{2n-3}+tF_{2n-4}",
                "F_{2n-5}+tF_{2n-6}",
            ],
        },
        ColumnBlock {
            family: Family::E,
            formula: "|E_{n,t}^{i}|=tF_{n-i}+F_{n-i+1}",
            formula_fn: |n, i| Poly::linear(f(n - i), f(n - i + 1)),
            least_column: 2,
            cells: ["tF_{n-1}+F_{n}", "tF_{n-2}+F_{n-1}", "tF_{n-3}+F_{n-2}"],
        },
    ]
}

/// `|XY_n| = -(a t^2 + b t + c)` with the printed coefficient expressions.
pub(crate) struct ProductTerm {
    pub text: &'static str,
    pub coeffs: fn(i64) -> (BigInt, BigInt, BigInt),
}

impl ProductTerm {
    pub fn poly(&self, n: i64) -> Poly {
        negated_quadratic(self.coeffs, n)
    }
}

fn negated_quadratic(coeffs: fn(i64) -> (BigInt, BigInt, BigInt), n: i64) -> Poly {
    let (a, b, c) = coeffs(n);
    Poly::quadratic(-a, -b, -c)
}

pub(crate) const CD_TERM: ProductTerm = ProductTerm {
    text: "-F_{n+1}F_{2n-1} t^{2}-(F_{n+1}F_{2n}+F_{n}F_{2n-1})t-F_{n} F_{2n}",
    coeffs: |n| {
        (
            f(n + 1) * f(2 * n - 1),
            f(n + 1) * f(2 * n) + f(n) * f(2 * n - 1),
            f(n) * f(2 * n),
        )
    },
};

pub(crate) const EF_TERM: ProductTerm = ProductTerm {
    text: "-F_{2n-2}F_{n+1}t^{2}-(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})t-F_{2n-1}F_{n}",
    coeffs: |n| {
        (
            f(2 * n - 2) * f(n + 1),
            f(2 * n - 2) * f(n) + f(n + 1) * f(2 * n - 1),
            f(2 * n - 1) * f(n),
        )
    },
};

pub(crate) const GH_PROOF_TERM: ProductTerm = ProductTerm {
    text: "-F_{n-1}F_{2n-2}t^{2}-(F_{n-2}F_{2n-2}+F_{n-1} F_{2n-1})t-F_{n-2}F_{2n-1}",
    coeffs: |n| {
        (
            f(n - 1) * f(2 * n - 2),
            f(n - 2) * f(2 * n - 2) + f(n - 1) * f(2 * n - 1),
            f(n - 2) * f(2 * n - 1),
        )
    },
};

pub(crate) struct ProductBlock {
    pub pair: ProductPair,
    pub term: ProductTerm,
    pub listed: [&'static str; 3],
    /// Printed cells for `t = -1, 0, 1, 2`.
    pub rows: [(i64, [i64; 3]); 4],
}

pub(crate) fn product_blocks() -> Vec<ProductBlock> {
    let listed = ["-t^2-2t-1", "-4t^2-8t-3", "-15t^2-34t-16"];
    vec![
        ProductBlock {
            pair: ProductPair::CD,
            term: CD_TERM,
            listed,
            rows: [
                (-1, [0, 1, 3]),
                (0, [-1, -3, -16]),
                (1, [-4, -15, -65]),
                (2, [-9, -35, -144]),
            ],
        },
        ProductBlock {
            pair: ProductPair::EF,
            term: EF_TERM,
            listed,
            rows: [
                (-1, [0, 1, 3]),
                (0, [-1, -3, -16]),
                (1, [-2, -15, -65]),
                (2, [-9, -35, -144]),
            ],
        },
        ProductBlock {
            pair: ProductPair::GH,
            term: GH_PROOF_TERM,
            listed,
            rows: [
                (-1, [0, 1, 3]),
                (0, [-1, -3, -16]),
                (1, [-2, -15, -65]),
                (2, [-9, -35, -144]),
            ],
        },
    ]
}

/// Matrices printed in the worked product examples, keyed by the claim's
/// proof group.
fn displays() -> Vec<(&'static str, FamilyId, Vec<&'static [&'static str]>)> {
    use Family::*;
    use ProductPair::*;
    let fam = FamilyId::Family;
    let prod = FamilyId::Product;
    vec![
        ("CD", fam(C), vec![&["t+1"]]),
        ("CD", fam(D), vec![&["t+1"]]),
        ("CD", prod(CD), vec![&["-t^2-2t-1"]]),
        ("CD", fam(C), vec![&["2", "1"], &["1", "t+1"]]),
        ("CD", fam(D), vec![&["2", "-1"], &["1", "t+1"]]),
        ("CD", prod(CD), vec![&["-3", "t+3"], &["t-1", "t^2+2t+2"]]),
        (
            "CD",
            fam(C),
            vec![&["2", "1", "0"], &["1", "2", "1"], &["1", "1", "t+1"]],
        ),
        (
            "CD",
            fam(D),
            vec![&["2", "1", "0"], &["1", "2", "1"], &["1", "1", "t+1"]],
        ),
        (
            "CD",
            prod(CD),
            vec![
                &["-3", "4", "-1"],
                &["1", "6", "t-1"],
                &["t", "t+4", "t^2+2t"],
            ],
        ),
        ("EF", fam(E), vec![&["t+1"]]),
        ("EF", fam(F), vec![&["t+1"]]),
        ("EF", prod(EF), vec![&["-t^2-2t-1"]]),
        ("EF", fam(E), vec![&["2", "-1"], &["1", "t+1"]]),
        ("EF", fam(F), vec![&["2", "-1"], &["-1", "t+1"]]),
        ("EF", prod(EF), vec![&["-3", "-t+1"], &["-t-3", "t^2+2t+2"]]),
        (
            "EF",
            fam(E),
            vec![&["2", "1", "0"], &["1", "2", "1"], &["1", "1", "t+1"]],
        ),
        (
            "EF",
            fam(F),
            vec![&["2", "-1", "0"], &["1", "2", "-1"], &["1", "-1", "t+1"]],
        ),
        (
            "EF",
            prod(EF),
            vec![
                &["-3", "0", "1"],
                &["-5", "6", "-t-3"],
                &["t-2", "-t+2", "t^2+2t"],
            ],
        ),
        ("GH", fam(G), vec![&["t+1"]]),
        ("GH", fam(H), vec![&["t+1"]]),
        ("GH", prod(GH), vec![&["-t^2-2t-1"]]),
        ("GH", fam(G), vec![&["2", "-1"], &["-1", "t+1"]]),
        ("GH", fam(H), vec![&["2", "1"], &["-1", "t+1"]]),
        ("GH", prod(GH), vec![&["-3", "-t-3"], &["-t+1", "t^2+2t+2"]]),
        (
            "GH",
            fam(G),
            vec![&["2", "-1", "0"], &["-1", "2", "-1"], &["1", "-1", "t+1"]],
        ),
        (
            "GH",
            fam(H),
            vec![&["2", "1", "0"], &["1", "2", "1"], &["1", "-1", "t+1"]],
        ),
        (
            "GH",
            prod(GH),
            vec![
                &["-3", "-4", "-1"],
                &["-1", "6", "-t+1"],
                &["t", "-t-4", "t^2+2t"],
            ],
        ),
    ]
}

/// Factor determinants quoted inside the worked product examples.
const PROOF_DETS: [(&str, Family, i64, &str); 10] = [
    ("CD", Family::C, 2, "2t+1"),
    ("CD", Family::D, 2, "2t+3"),
    ("CD", Family::C, 3, "3t+2"),
    ("CD", Family::D, 3, "5t+8"),
    ("EF", Family::E, 3, "5t+8"),
    ("EF", Family::F, 3, "3t+2"),
    ("GH", Family::G, 2, "2t+1"),
    ("GH", Family::H, 2, "2t+3"),
    ("GH", Family::G, 3, "3t+2"),
    ("GH", Family::H, 3, "5t+8"),
];

struct Builder(Vec<Claim>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        id: String,
        section: Section,
        anchor: String,
        kind: ClaimKind,
        n_start: i64,
        n_end: Option<i64>,
        check: Check,
    ) {
        self.0.push(Claim {
            id,
            section,
            anchor,
            kind,
            n_start,
            n_end,
            check,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn det(
        &mut self,
        id: String,
        section: Section,
        anchor: String,
        kind: ClaimKind,
        subject: FamilyId,
        at_t: Option<i64>,
        range: (i64, Option<i64>),
        predicted: Formula,
    ) {
        self.push(
            id,
            section,
            anchor,
            kind,
            range.0,
            range.1,
            Check::Determinant {
                subject,
                at_t,
                predicted,
            },
        );
    }

    /// A printed value at a single `n`.
    #[allow(clippy::too_many_arguments)]
    fn point(
        &mut self,
        id: String,
        section: Section,
        anchor: String,
        kind: ClaimKind,
        subject: FamilyId,
        at_t: Option<i64>,
        n: i64,
        value: Poly,
    ) {
        let predicted = Formula::constant(value);
        self.det(
            id,
            section,
            anchor,
            kind,
            subject,
            at_t,
            (n, Some(n)),
            predicted,
        );
    }
}

/// Every registered claim, in a fixed order.
pub fn registered_claims() -> Vec<Claim> {
    use ClaimKind::*;
    let mut b = Builder(Vec::new());

    b.det(
        "A-general".into(),
        Section::Families,
        "tridiagonal 1 / i / i matrix | determinant is F_{n+1} for n in N".into(),
        GeneralTerm,
        FamilyId::A,
        None,
        (1, None),
        Formula::int(|n| f(n + 1)),
    );
    b.det(
        "B-general".into(),
        Section::Families,
        "Hessenberg matrix B_n | |B_n|=F_n".into(),
        GeneralTerm,
        FamilyId::B,
        None,
        (1, None),
        Formula::int(f),
    );

    for block in family_blocks() {
        let x = block.family.name();
        let subject = FamilyId::Family(block.family);
        let general = block.general_fn;
        b.det(
            format!("{x}-general"),
            Section::Families,
            format!("{x}_{{n,t}} general term | {}", block.general),
            GeneralTerm,
            subject,
            None,
            (1, None),
            Formula::poly(general),
        );
        for (k, value) in block.text.iter().enumerate() {
            let n = k as i64 + 1;
            b.point(
                format!("{x}-text-n{n}"),
                Section::Families,
                format!("{x}_{{n,t}} listed values | |{x}_{{{n},t}}|={value}"),
                TextValue,
                subject,
                None,
                n,
                p(value),
            );
        }

        for row in &block.rows {
            let tag = match row.t {
                -1 => "tm1".to_string(),
                t => format!("t{t}"),
            };
            let cells: Vec<String> = row.printed.iter().map(|v| v.to_string()).collect();
            let printed = row.printed;
            b.det(
                format!("T1-{x}-{tag}-cells"),
                Section::Table1,
                format!("Table 1, matrix {x}, t={} | {}", row.t, cells.join(" ")),
                TableCell,
                subject,
                Some(row.t),
                (1, Some(3)),
                Formula::int(move |n| BigInt::from(printed[(n - 1) as usize])),
            );
            let value = row.value;
            b.det(
                format!("T1-{x}-{tag}-label"),
                Section::Table1,
                format!("Table 1, matrix {x}, t={} | {}", row.t, row.label),
                TableCell,
                subject,
                Some(row.t),
                (1, None),
                Formula::int(value),
            );
            if let Some((a, c)) = row.lucas {
                b.det(
                    format!("T1-{x}-{tag}-lucas"),
                    Section::Table1,
                    format!(
                        "Table 1, matrix {x}, t={} | {} with L_1=2, L_2=1",
                        row.t, row.label
                    ),
                    TableCell,
                    subject,
                    Some(row.t),
                    (1, None),
                    Formula::int(move |n| lucas(a * n + c)),
                );
                b.det(
                    format!("T1-{x}-{tag}-lucas-std"),
                    Section::Table1,
                    format!(
                        "Table 1, matrix {x}, t={} | {} with L_1=1, L_2=3",
                        row.t, row.label
                    ),
                    TableCell,
                    subject,
                    Some(row.t),
                    (1, None),
                    Formula::int(move |n| lucas(a * n + c + 1)),
                );
            }
        }
        let symbolic = block.symbolic;
        b.det(
            format!("T1-{x}-t-cells"),
            Section::Table1,
            format!("Table 1, matrix {x}, t | {}", symbolic.join(" ")),
            TableCell,
            subject,
            None,
            (1, Some(3)),
            Formula::poly(move |n| p(symbolic[(n - 1) as usize])),
        );
    }

    for block in column_blocks() {
        let x = block.family.name();
        let formula = block.formula_fn;
        for mode in [SubstitutionMode::AllOnes, SubstitutionMode::BasisColumn] {
            let m = mode.name();
            b.push(
                format!("{x}i-formula-{m}"),
                Section::Substituted,
                format!(
                    "{x}^i columns, {m} | {}, n>=i>={}",
                    block.formula, block.least_column
                ),
                GeneralTerm,
                block.least_column as i64,
                None,
                Check::SubstitutedFormula {
                    family: block.family,
                    mode,
                    columns: Columns::From(block.least_column),
                    predicted: ColumnFormula::new(formula),
                },
            );
            let (multiplier, constant, quote) = match block.family {
                Family::E => (
                    2,
                    p("t+1"),
                    "2|E_{n,t}|=(t+1)+sum_{i=1}^{n}|E_{n,t}^{i}|, n>=2",
                ),
                Family::C => (1, Poly::t(), "|C_{n,t}|=t+sum_{i=1}^{n}|C_{n,t}^{i}|"),
                _ => (1, Poly::t(), "|D_{n,t}|=t+sum_{i=1}^{n}|D_{n,t}^{i}|"),
            };
            b.push(
                format!("{x}-summation-{m}"),
                Section::Substituted,
                format!("{x}^i columns, {m} | {quote}"),
                SummationRecurrence,
                if block.family == Family::E { 2 } else { 1 },
                None,
                Check::Summation {
                    family: block.family,
                    mode,
                    multiplier,
                    constant,
                },
            );
            for (k, cell) in block.cells.iter().enumerate() {
                let i = k + 1;
                b.push(
                    format!("T2-{x}-i{i}-{m}"),
                    Section::Table2,
                    format!("Table 2, matrix {x}^i, i={i}, {m} | {cell}"),
                    TableCell,
                    i as i64,
                    None,
                    Check::SubstitutedFormula {
                        family: block.family,
                        mode,
                        columns: Columns::Fixed(i),
                        predicted: ColumnFormula::new(formula),
                    },
                );
            }
        }
    }

    b.push(
        "Lorentz-unit".into(),
        Section::Lorentz,
        "unit matrix under the Lorentz product | I_n ._L I_n = diag(-1,1,...,1)".into(),
        ProductLaw,
        1,
        None,
        Check::LorentzUnit,
    );
    b.det(
        "Lorentz-unit-det".into(),
        Section::Lorentz,
        "unit matrix under the Lorentz product | det diag(-1,1,...,1) = -1".into(),
        ProductLaw,
        FamilyId::LorentzIdentity,
        None,
        (1, None),
        Formula::constant(BigInt::from(-1)),
    );
    for pair in ProductPair::ALL {
        let (a, c) = pair.factors();
        b.push(
            format!("det-law-{}", pair.name()),
            Section::Lorentz,
            format!("Lorentz determinant law on {a}, {c} | det(A ._L B)=-det A . det B"),
            ProductLaw,
            1,
            None,
            Check::ProductLaw { pair },
        );
    }

    for block in product_blocks() {
        let xy = block.pair.name();
        let subject = FamilyId::Product(block.pair);
        let (general_id, general_anchor) = match block.pair {
            ProductPair::GH => (
                "GH-proof".to_string(),
                format!("GH_{{n,t}} proof | {}", block.term.text),
            ),
            _ => (
                format!("{xy}-general"),
                format!("{xy}_{{n,t}} proof | {}", block.term.text),
            ),
        };
        let term = block.term.coeffs;
        b.det(
            general_id,
            Section::Products,
            general_anchor,
            GeneralTerm,
            subject,
            None,
            (1, None),
            Formula::poly(move |n| negated_quadratic(term, n)),
        );
        for (k, value) in block.listed.iter().enumerate() {
            let n = k as i64 + 1;
            b.point(
                format!("{xy}-listed-n{n}"),
                Section::Products,
                format!("{xy}_{{n,t}} statement | element {n}: {value}"),
                TextValue,
                subject,
                None,
                n,
                p(value),
            );
        }
        for (t, printed) in block.rows {
            let tag = if t == -1 {
                "tm1".to_string()
            } else {
                format!("t{t}")
            };
            let cells: Vec<String> = printed.iter().map(|v| v.to_string()).collect();
            b.det(
                format!("T3-{xy}-{tag}-cells"),
                Section::Table3,
                format!("Table 3, |{xy}_{{n,t}}|, t={t} | {}", cells.join(" ")),
                TableCell,
                subject,
                Some(t),
                (1, Some(3)),
                Formula::int(move |n| BigInt::from(printed[(n - 1) as usize])),
            );
            b.det(
                format!("T3-{xy}-{tag}-label"),
                Section::Table3,
                format!(
                    "Table 3, |{xy}_{{n,t}}|, t={t} | {} at t={t}",
                    block.term.text
                ),
                TableCell,
                subject,
                Some(t),
                (1, None),
                Formula::int(move |n| negated_quadratic(term, n).eval(&BigInt::from(t))),
            );
        }
    }

    b.det(
        "EF-statement".into(),
        Section::Products,
        "EF_{n,t} statement | -F_{2n-2} F_{n+1} t^{2}-(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})-F_{2n-1}F_{n}".into(),
        GeneralTerm,
        FamilyId::Product(ProductPair::EF),
        None,
        (1, None),
        Formula::poly(|n| {
            let (a, c2, c) = (EF_TERM.coeffs)(n);
            Poly::quadratic(-a, 0, -c2 - c)
        }),
    );
    b.det(
        "GH-statement".into(),
        Section::Products,
        format!("GH_{{n,t}} statement | {}", EF_TERM.text),
        GeneralTerm,
        FamilyId::Product(ProductPair::GH),
        None,
        (1, None),
        Formula::poly(|n| EF_TERM.poly(n)),
    );

    let mut seen: std::collections::BTreeMap<String, usize> = Default::default();
    for (group, subject, rows) in displays() {
        let order = rows.len();
        let key = format!("{group}-proof-{}{order}", subject);
        *seen.entry(key.clone()).or_default() += 1;
        let parsed: Vec<Vec<Poly>> = rows
            .iter()
            .map(|r| r.iter().map(|s| p(s)).collect())
            .collect();
        let shown: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
        b.push(
            format!("{key}-display"),
            Section::Products,
            format!(
                "{group}_{{n,t}} proof | {subject}_{{{order},t}}=[{}]",
                shown.join(",")
            ),
            MatrixDisplay,
            order as i64,
            Some(order as i64),
            Check::Display {
                subject,
                rows: parsed,
            },
        );
    }
    debug_assert!(seen.values().all(|&c| c == 1));

    for (group, family, n, value) in PROOF_DETS {
        b.point(
            format!("{group}-proof-det-{family}{n}"),
            Section::Products,
            format!("{group}_{{n,t}} proof | det {family}_{{{n},t}} = {value}"),
            TextValue,
            FamilyId::Family(family),
            None,
            n,
            p(value),
        );
    }

    b.0
}
