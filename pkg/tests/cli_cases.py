"""Golden CLI invocations shared by the test suite and the regen script.

Each case is (golden file name, argv).  Invocations that write a report use
--out, so the golden holds the report bytes; the others capture stdout.
"""

STDOUT_CASES = [
    ("ks_1_0.txt", ["ks", "1,0"]),
    ("ks_0_0.txt", ["ks", "0,0"]),
    ("ks_2_0_k0_sing.txt", ["ks", "2,0", "--k", "0", "--part", "sing"]),
    ("ks_3_0_k1.txt", ["ks", "3,0", "--k", "1"]),
    ("eig_2_0_k0_b.txt", ["eig", "2,0", "--k", "0", "--route", "b"]),
    ("eig_1_1_k0_all.txt", ["eig", "1,1", "--k", "0", "--route", "all"]),
    ("eig_2_1_k1_json.txt", ["eig", "2,1", "--k", "1", "--route", "all", "--format", "json"]),
    ("deligne_1_1_t0.txt", ["deligne", "1,1", "--t", "0"]),
    ("deligne_1_0_t7.txt", ["deligne", "1,0", "--t", "7"]),
    ("deligne_0_0_t_half.txt", ["deligne", "0,0", "--t", "1/2"]),
    ("table_k1_s3.txt", ["table", "--k", "1", "--size-max", "3"]),
    ("table_k0_s2_csv.txt", ["table", "--k", "0", "--size-max", "2", "--format", "csv"]),
]

REPORT_CASES = [
    (
        "verify_identity_e_n7.json",
        ["verify", "identity-e", "--N-max", "7", "--format", "json"],
    ),
    (
        "verify_capelli_k3_s8.json",
        ["verify", "capelli", "--k-max", "3", "--size-max", "8", "--format", "json"],
    ),
    (
        "verify_dougall_a4_b3.json",
        ["verify", "dougall", "--a-max", "4", "--bcd-max", "3", "--format", "json"],
    ),
    (
        "verify_dougall_small.csv",
        ["verify", "dougall", "--a-max", "2", "--bcd-max", "1", "--format", "csv"],
    ),
]
