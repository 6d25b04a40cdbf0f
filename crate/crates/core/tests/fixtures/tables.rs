// Tables transcribed from the reference tables; terms are unnormalized.

/// `(label, terms)`; each term is a sign followed by a bitstring.
pub const TABLE_A1_3_2_P0: &[(&str, &[&str])] = &[
    ("000", &["+000", "+010", "+100", "+111"]),
    ("001", &["+001", "+011", "+101", "+110"]),
    ("010", &["+000", "-010", "+100", "-111"]),
    ("011", &["+001", "-011", "+101", "-110"]),
    ("100", &["+000", "+010", "-100", "-111"]),
    ("101", &["+001", "+011", "-101", "-110"]),
    ("110", &["+000", "-010", "-100", "+111"]),
    ("111", &["+001", "-011", "-101", "+110"]),
];

pub const TABLE_O1_3_2_P0: &[(&str, &[&str])] = &[
    ("000", &["+000", "+011", "+101", "+110"]),
    ("001", &["+001", "+010", "+100", "+111"]),
    ("010", &["+000", "-011", "+101", "-110"]),
    ("011", &["+001", "-010", "+100", "-111"]),
    ("100", &["+000", "+011", "-101", "-110"]),
    ("101", &["+001", "+010", "-100", "-111"]),
    ("110", &["+000", "-011", "-101", "+110"]),
    ("111", &["+001", "-010", "-100", "+111"]),
];

/// `(O1 label, AQ label, signed braid label, terms)` for n = 3, m = 2, P2.
pub const TABLE_BRAID_3: &[(&str, &str, &str, &[&str])] = &[
    ("000", "001", "+011", &["+000", "+011", "+101", "-110"]),
    ("001", "000", "+001", &["+001", "+010", "+100", "-111"]),
    ("010", "011", "+101", &["+000", "-011", "+101", "+110"]),
    ("011", "010", "+111", &["+001", "-010", "+100", "+111"]),
    ("100", "101", "+110", &["+000", "+011", "-101", "+110"]),
    ("101", "100", "-100", &["+001", "+010", "-100", "+111"]),
    ("110", "111", "+000", &["+000", "-011", "-101", "-110"]),
    ("111", "110", "-010", &["+001", "-010", "-100", "-111"]),
];

/// `(O1 label, signed braid label, terms)` for n = 4, m = 3, P2.
pub const TABLE_BRAID_4: &[(&str, &str, &[&str])] = &[
    (
        "0000",
        "+0011",
        &["+0000", "+0011", "+0101", "-0110", "+1001", "-1010", "-1100", "-1111"],
    ),
    (
        "0001",
        "+0001",
        &["+0001", "+0010", "+0100", "-0111", "+1000", "-1011", "-1101", "-1110"],
    ),
    (
        "0010",
        "+0101",
        &["+0000", "-0011", "+0101", "+0110", "+1001", "+1010", "-1100", "+1111"],
    ),
    (
        "0011",
        "+0111",
        &["+0001", "-0010", "+0100", "+0111", "+1000", "+1011", "-1101", "+1110"],
    ),
    (
        "0100",
        "+1111",
        &["+0000", "+0011", "-0101", "+0110", "+1001", "-1010", "+1100", "+1111"],
    ),
    (
        "0101",
        "+1101",
        &["+0001", "+0010", "-0100", "+0111", "+1000", "-1011", "+1101", "+1110"],
    ),
    (
        "0110",
        "+1001",
        &["+0000", "-0011", "-0101", "-0110", "+1001", "+1010", "+1100", "-1111"],
    ),
    (
        "0111",
        "+1011",
        &["+0001", "-0010", "-0100", "-0111", "+1000", "+1011", "+1101", "-1110"],
    ),
    (
        "1000",
        "+1010",
        &["+0000", "+0011", "+0101", "-0110", "-1001", "+1010", "+1100", "+1111"],
    ),
    (
        "1001",
        "-1000",
        &["+0001", "+0010", "+0100", "-0111", "-1000", "+1011", "+1101", "+1110"],
    ),
    (
        "1010",
        "+1100",
        &["+0000", "-0011", "+0101", "+0110", "-1001", "-1010", "+1100", "-1111"],
    ),
    (
        "1011",
        "-1110",
        &["+0001", "-0010", "+0100", "+0111", "-1000", "-1011", "+1101", "-1110"],
    ),
    (
        "1100",
        "+0110",
        &["+0000", "+0011", "-0101", "+0110", "-1001", "+1010", "-1100", "-1111"],
    ),
    (
        "1101",
        "-0100",
        &["+0001", "+0010", "-0100", "+0111", "-1000", "+1011", "-1101", "-1110"],
    ),
    (
        "1110",
        "+0000",
        &["+0000", "-0011", "-0101", "-0110", "-1001", "-1010", "-1100", "+1111"],
    ),
    (
        "1111",
        "-0010",
        &["+0001", "-0010", "-0100", "-0111", "-1000", "-1011", "-1101", "+1110"],
    ),
];

/// One printed row of the correlation table. Values are kept as printed so
/// the number of significant digits is available; `None` marks "NA".
pub struct CorrelationRow {
    /// `None` for the row that holds for every n.
    pub n: Option<usize>,
    pub m: usize,
    pub phase: &'static str,
    /// O1, AQ, A1.
    pub ggm: [Option<&'static str>; 3],
    pub concurrence: [Option<&'static str>; 3],
    pub avg_entropy: [Option<&'static str>; 3],
    pub delta_concurrence_o1: &'static str,
    pub delta_discord_o1: &'static str,
}

pub const TABLE_CORRELATIONS: &[CorrelationRow] = &[
    CorrelationRow {
        n: None,
        m: 1,
        phase: "P0",
        ggm: [Some("0.5"), None, Some("0.5")],
        concurrence: [Some("1"), None, Some("1.0")],
        avg_entropy: [Some("1.0"), None, Some("1.0")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "1.0",
    },
    CorrelationRow {
        n: Some(3),
        m: 2,
        phase: "P0",
        ggm: [Some("0.5"), Some("0.5"), Some("0.25")],
        concurrence: [Some("1"), Some("1.0"), Some("0.866025")],
        avg_entropy: [Some("1.0"), Some("1.0"), Some("0.811278")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.994185",
    },
    CorrelationRow {
        n: Some(3),
        m: 2,
        phase: "P2",
        ggm: [Some("0.5"), Some("0.5"), Some("0.25")],
        concurrence: [Some("1"), Some("1.0"), Some("0.866025")],
        avg_entropy: [Some("1.0"), Some("1.0"), Some("0.811278")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.993259",
    },
    CorrelationRow {
        n: Some(4),
        m: 2,
        phase: "P0",
        ggm: [Some("0.5"), Some("0.5"), Some("0.25")],
        concurrence: [Some("1"), Some("1.0"), Some("0.866025")],
        avg_entropy: [Some("1.4"), Some("1.4"), Some("0.976292")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.997092",
    },
    CorrelationRow {
        n: Some(4),
        m: 2,
        phase: "P2",
        ggm: [Some("0.5"), Some("0.5"), Some("0.25")],
        concurrence: [Some("1"), Some("1.0"), Some("0.866025")],
        avg_entropy: [Some("1.4"), Some("1.4"), Some("0.976292")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.996629",
    },
    CorrelationRow {
        n: Some(4),
        m: 3,
        phase: "P0",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.661438")],
        avg_entropy: [Some("1.0"), Some("1.0588"), Some("0.61106")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.991277",
    },
    CorrelationRow {
        n: Some(4),
        m: 3,
        phase: "P2",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.968246")],
        avg_entropy: [Some("1.0"), Some("1.0588"), Some("1.09811")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.989888",
    },
    CorrelationRow {
        n: Some(4),
        m: 3,
        phase: "P3",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.661438")],
        avg_entropy: [Some("1.3"), Some("1.0588"), Some("0.61106")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.0656589",
    },
    CorrelationRow {
        n: Some(4),
        m: 3,
        phase: "Pz",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.968246")],
        avg_entropy: [Some("1.4"), Some("1.24737"), Some("1.09811")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.996629",
    },
    CorrelationRow {
        n: Some(5),
        m: 2,
        phase: "P0",
        ggm: [Some("0.5"), Some("0.5"), Some("0.25")],
        concurrence: [Some("1"), Some("1.0"), Some("0.866025")],
        avg_entropy: [Some("1.4"), Some("1.4"), Some("0.976292")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.997092",
    },
    CorrelationRow {
        n: Some(5),
        m: 2,
        phase: "P2",
        ggm: [Some("0.5"), Some("0.5"), Some("0.25")],
        concurrence: [Some("1"), Some("1.0"), Some("0.866025")],
        avg_entropy: [Some("1.4"), Some("1.4"), Some("0.976292")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.996629",
    },
    CorrelationRow {
        n: Some(5),
        m: 3,
        phase: "P0",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.661438")],
        avg_entropy: [Some("1.4"), Some("1.18879"), Some("0.688201")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.994185",
    },
    CorrelationRow {
        n: Some(5),
        m: 3,
        phase: "P2",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.968246")],
        avg_entropy: [Some("1.4"), Some("1.18879"), Some("1.09328")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.993259",
    },
    CorrelationRow {
        n: Some(5),
        m: 3,
        phase: "P3",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.661438")],
        avg_entropy: [Some("1.5"), Some("1.18879"), Some("0.688201")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.377106",
    },
    CorrelationRow {
        n: Some(5),
        m: 3,
        phase: "Pz",
        ggm: [Some("0.5"), Some("0.25"), Some("0.125")],
        concurrence: [Some("1"), Some("0.866025"), Some("0.968246")],
        avg_entropy: [Some("1.53333"), Some("1.33423"), Some("1.09328")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "1.0",
    },
    CorrelationRow {
        n: Some(5),
        m: 4,
        phase: "P0",
        ggm: [Some("0.5"), Some("0.125"), Some("0.0625")],
        concurrence: [Some("1"), Some("0.661438"), Some("0.484123")],
        avg_entropy: [Some("1.0"), Some("0.747128"), Some("0.403766")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.98837",
    },
    CorrelationRow {
        n: Some(5),
        m: 4,
        phase: "P2",
        ggm: [Some("0.5"), Some("0.125"), Some("0.0625")],
        concurrence: [Some("1"), Some("0.968246"), Some("0.992157")],
        avg_entropy: [Some("1.53333"), Some("1.34022"), Some("1.29369")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.997092",
    },
    CorrelationRow {
        n: Some(5),
        m: 4,
        phase: "P3",
        ggm: [Some("0.5"), Some("0.125"), Some("0.0625")],
        concurrence: [Some("1"), Some("0.968246"), Some("0.927025")],
        avg_entropy: [Some("1.41634"), Some("1.27634"), Some("1.10593")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.0654596",
    },
    CorrelationRow {
        n: Some(5),
        m: 4,
        phase: "P4",
        ggm: [Some("0.5"), Some("0.125"), Some("0.0625")],
        concurrence: [Some("1"), Some("0.661438"), Some("0.484123")],
        avg_entropy: [Some("1.27043"), Some("0.747128"), Some("0.403766")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.446504",
    },
    CorrelationRow {
        n: Some(5),
        m: 4,
        phase: "Pz",
        ggm: [Some("0.5"), Some("0.125"), Some("0.0625")],
        concurrence: [Some("1"), Some("1.0"), Some("0.992157")],
        avg_entropy: [Some("1.4"), Some("1.24804"), Some("1.10757")],
        delta_concurrence_o1: "1",
        delta_discord_o1: "0.996629",
    },
];
