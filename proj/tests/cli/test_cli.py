"""End-to-end exercise of every kg-probe subcommand against tiny inputs."""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
SRC = sys.argv[2] if len(sys.argv) > 2 else "."

CN_RAW = "".join(
    f"/a/x\t/r/{rel}\t/c/en/{h}\t/c/en/{t}\t{{}}\n"
    for rel, h, t in [
        ("IsA", "camping", "activity"),
        ("IsA", "tent", "shelter"),
        ("UsedFor", "tent", "camping"),
        ("Antonym", "day", "night"),
        ("RelatedTo", "fire", "camping"),
        ("RelatedTo", "no_one", "nobody"),
        ("NotMapped", "camping", "outdoors"),
    ]
) + "/a/y\t/r/IsA\t/c/fr/tente\t/c/en/shelter\t{}\n"

SWOW_RAW = (
    "cue,response,R123\n"
    "camping,tent,20\n"
    "tent,camping,11\n"
    "camping,fire,9\n"
    "day,night,30\n"
    "night,day,28\n"
    "fire,hot,5\n"
    "spark,NA,4\n"
)

NARRATIVES = (
    json.dumps(
        {
            "id": "n1",
            "frames": [
                {"predicate": "pitched", "arg0": "we", "arg1": "the tent"},
                {"predicate": "lit", "arg0": "we", "arg1": "a fire"},
            ],
        }
    )
    + "\n"
    + json.dumps(
        {
            "id": "n2",
            "frames": [
                {"predicate": "went camping", "arg1": "the woods"},
            ],
        }
    )
    + "\n"
)


def run(*args, expect=0, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [BIN, *args], capture_output=True, text=True, env=full_env
    )
    assert proc.returncode == expect, (
        args,
        proc.returncode,
        proc.stdout,
        proc.stderr,
    )
    return proc


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


def check_manifest(out_path, command):
    with open(out_path + ".manifest.json") as fh:
        m = json.load(fh)
    assert m["command"] == command, m
    assert m["tool"].startswith("kg-probe "), m
    assert m["timestamp"].endswith("Z"), m
    for digest in m["inputs_sha256"].values():
        assert len(digest) == 64, m
    assert any(o.endswith(os.path.basename(out_path)) for o in m["outputs"]), m


def main():
    tmp = tempfile.mkdtemp(prefix="kgprobe_cli_")
    p = lambda name: os.path.join(tmp, name)

    with open(p("cn_raw.tsv"), "w") as fh:
        fh.write(CN_RAW)
    with open(p("swow_raw.csv"), "w") as fh:
        fh.write(SWOW_RAW)
    with open(p("narratives.jsonl"), "w") as fh:
        fh.write(NARRATIVES)

    # --- ingest ------------------------------------------------------------
    out = run(
        "ingest", "--format", "conceptnet", "--in", p("cn_raw.tsv"),
        "--out", p("cn.tsv"), "--report", p("cn_report.json"),
    )
    assert "kept 7 of 8 rows" in out.stdout, out.stdout
    check_manifest(p("cn.tsv"), "ingest")
    with open(p("cn_report.json")) as fh:
        rep = json.load(fh)
    assert rep["rows_skipped_language"] == 1 and rep["triples"] == 7

    run(
        "ingest", "--format", "swow", "--in", p("swow_raw.csv"),
        "--out", p("sw.tsv"), "--label-relations",
    )
    sw_lines = read(p("sw.tsv")).decode().splitlines()
    assert len(sw_lines) == 6  # NA row dropped
    assert any("mutualassociated" in ln for ln in sw_lines)

    # canonical re-ingest is byte-stable
    out = run(
        "ingest", "--format", "canonical", "--in", p("cn.tsv"),
        "--out", p("cn_again.tsv"),
    )
    assert "kept 7 of 7 rows" in out.stdout, out.stdout
    assert read(p("cn_again.tsv")) == read(p("cn.tsv"))

    # --- stats and the table1 composite ------------------------------------
    run("stats", "--in", p("cn.tsv"), "--out", p("cn_stats.json"))
    with open(p("cn_stats.json")) as fh:
        stats = json.load(fh)
    assert stats["triples"] == 7 and stats["relations"] == 5

    run("stats", "--graph", p("cn.tsv"), "--out", p("cn_stats.tsv"),
        "--format", "tsv", "--label", "conceptnet")
    run("stats", "--graph", p("sw.tsv"), "--out", p("sw_stats.tsv"),
        "--format", "tsv", "--label", "swow")
    run("table1", "--cn", p("cn.tsv"), "--swow", p("sw.tsv"),
        "--out", p("table1.tsv"))
    cn_rows = read(p("cn_stats.tsv")).decode().splitlines(keepends=True)
    sw_rows = read(p("sw_stats.tsv")).decode().splitlines(keepends=True)
    chained = "".join(cn_rows + sw_rows[1:])  # drop the second header
    assert read(p("table1.tsv")).decode() == chained
    check_manifest(p("table1.tsv"), "table1")

    # --- overlap, relrecall vs fig3 ----------------------------------------
    run("overlap", "--a", p("cn.tsv"), "--b", p("sw.tsv"),
        "--out", p("overlap.json"))
    with open(p("overlap.json")) as fh:
        ov = json.load(fh)
    # camping, tent, fire, day, night are shared vocabulary
    assert ov["shared_nodes"] == 5, ov
    assert ov["edges_within_shared_b"] == 5, ov  # fire->hot leaves the set

    run("relrecall", "--full", p("cn.tsv"), "--other", p("sw.tsv"),
        "--out", p("recall.tsv"))
    run("fig3", "--cn", p("cn.tsv"), "--swow", p("sw.tsv"),
        "--out", p("fig3.tsv"))
    assert read(p("recall.tsv")) == read(p("fig3.tsv"))
    header, *rows = read(p("fig3.tsv")).decode().splitlines()
    assert header.split("\t")[:3] == ["relation", "f_r", "recall_r"]
    table = {r.split("\t")[0]: r.split("\t") for r in rows}
    assert table["usedfor"][2] == "1"  # tent->camping linked in SWOW
    assert table["isa"][2] == "0"

    # --- negation -----------------------------------------------------------
    run("negation", "--in", p("cn.tsv"), "--out", p("neg.json"))
    with open(p("neg.json")) as fh:
        neg = json.load(fh)
    assert neg["negated_edges"] == 1  # the (no one, relatedto, nobody) edge
    assert abs(neg["fraction"] - 1 / 7) < 1e-12

    # --- annodist / corpusfreq ----------------------------------------------
    with open(p("tags.tsv"), "w") as fh:
        fh.write("camping\tNOUN\ntent\tNOUN\nfire\tNOUN\nday\tNOUN\n"
                 "pitch\tVERB\nnice\tADJ\n")
    run("annodist", "--annotations", p("tags.tsv"), "--out", p("tags_out.tsv"),
        "--top-k", "2")
    lines = read(p("tags_out.tsv")).decode().splitlines()
    assert lines[0] == "tag\tshare" and len(lines) == 3
    assert lines[1].startswith("NOUN\t0.666667")

    with open(p("freq.tsv"), "w") as fh:
        fh.write("camping\t100\ntent\t50\nfire\t30\nday\t20\nnight\t10\n"
                 "activity\t40\nshelter\t8\noutdoors\t6\n")
    run("corpusfreq", "--graph", p("cn.tsv"), "--table", p("freq.tsv"),
        "--out", p("freq_cov.json"))
    with open(p("freq_cov.json")) as fh:
        cov = json.load(fh)
    assert abs(cov["missing_fraction"] - 2 / 10) < 1e-12  # no one, nobody

    # --- scriptgraph / project vs fig4 --------------------------------------
    run("scriptgraph", "--srl", p("narratives.jsonl"),
        "--out", p("scripts.jsonl"))
    scripts = [json.loads(ln) for ln in read(p("scripts.jsonl")).decode().splitlines()]
    assert [s["id"] for s in scripts] == ["n1", "n2"]
    assert "tent" in scripts[0]["nodes"]

    run("project", "--graphs", p("scripts.jsonl"), "--kg", p("cn.tsv"),
        "--out", p("proj_paths.jsonl"), "--summary", p("proj.json"),
        "--hist", p("proj_hist.tsv"))
    with open(p("proj.json")) as fh:
        proj = json.load(fh)
    assert proj["total_pairs"] == sum(
        (proj["found_pairs"], proj["head_missing"], proj["tail_missing"],
         proj["no_path"]))
    pairs = [json.loads(ln)
             for ln in read(p("proj_paths.jsonl")).decode().splitlines()]
    assert len(pairs) == proj["total_pairs"]
    assert all(r["status"] in
               ("found", "head-missing", "tail-missing", "no-path")
               for r in pairs)
    assert sum(r["status"] == "found" for r in pairs) == proj["found_pairs"]

    run("fig4", "--srl", p("narratives.jsonl"), "--kg", p("cn.tsv"),
        "--out", p("fig4_hist.tsv"), "--paths-out", p("fig4_paths.jsonl"))
    assert read(p("fig4_hist.tsv")) == read(p("proj_hist.tsv"))
    assert read(p("fig4_hist.tsv") + ".scripts.jsonl") == read(p("scripts.jsonl"))
    assert read(p("fig4_paths.jsonl")) == read(p("proj_paths.jsonl"))

    # --- ground / paths ------------------------------------------------------
    run("ground", "--kg", p("cn.tsv"), "--question",
        "is camping fun in a tent", "--answer", "an outdoor activity",
        "--out", p("grounded.json"))
    with open(p("grounded.json")) as fh:
        grounded = json.load(fh)
    assert grounded["question_concepts"] == ["camping", "tent"]
    assert grounded["answer_concepts"] == ["activity"]

    run("paths", "--kg", p("cn.tsv"), "--question", "go camping",
        "--answer", "fun activity", "--out", p("paths.json"))
    with open(p("paths.json")) as fh:
        paths = json.load(fh)
    assert paths["count"] == 1
    assert paths["paths"][0]["relations"] == ["isa"]

    # batch: items JSONL -> grounded JSONL -> paths JSONL
    with open(p("items.jsonl"), "w") as fh:
        fh.write(json.dumps({"id": 1, "question": "is camping fun in a tent",
                             "answers": ["an outdoor activity",
                                         "a shelter"]}) + "\n")
        fh.write(json.dumps({"id": "q2", "question": "what goes with fire",
                             "answers": []}) + "\n")
    run("ground", "--kg", p("cn.tsv"), "--items", p("items.jsonl"),
        "--out", p("grounded.jsonl"))
    grounded_rows = [json.loads(ln)
                     for ln in read(p("grounded.jsonl")).decode().splitlines()]
    assert [g["id"] for g in grounded_rows] == [1, "q2"]
    assert grounded_rows[0]["question_concepts"] == ["camping", "tent"]
    assert [a["concepts"] for a in grounded_rows[0]["answers"]] == [
        ["activity"], ["shelter"]]
    assert grounded_rows[1]["question_concepts"] == ["fire"]

    run("paths", "--kg", p("cn.tsv"), "--grounded", p("grounded.jsonl"),
        "--hops", "2", "--out", p("paths_batch.jsonl"))
    batch = [json.loads(ln)
             for ln in read(p("paths_batch.jsonl")).decode().splitlines()]
    assert len(batch) == 2
    first, second = batch[0]["answers"], batch[1]["answers"]
    # camping->activity (1 hop) and tent->camping->activity (2 hops)
    assert first[0]["count"] == 2
    assert first[0]["paths"][0]["nodes"] == ["camping", "activity"]
    assert first[1]["count"] == 1  # tent->shelter
    assert second == []

    bad = run("ground", "--kg", p("cn.tsv"), "--out", p("nope.json"),
              expect=1)  # neither --items nor --question
    assert bad.stderr

    # --- merge / densify ------------------------------------------------------
    out = run("merge", "--kg", p("cn.tsv"), "--scheme", "seventeen",
              "--out", p("merged.tsv"))
    assert "notmapped" in out.stderr
    merged_lines = read(p("merged.tsv")).decode().splitlines()
    assert len(merged_lines) == 6  # unmapped relation dropped

    run("merge", "--kg", p("cn.tsv"), "--scheme", "17",
        "--out", p("merged17.tsv"))
    assert read(p("merged17.tsv")) == read(p("merged.tsv"))

    run("densify", "--kg", p("cn.tsv"), "--out", p("dense.tsv"))
    assert len(read(p("dense.tsv")).decode().splitlines()) == 14

    # --- transe ----------------------------------------------------------------
    run("transe", "--kg", p("cn.tsv"), "--out", p("rel_emb.tsv"),
        "--dim", "8", "--epochs", "5", "--report", p("transe.json"))
    emb = read(p("rel_emb.tsv")).decode().splitlines()
    assert len(emb) == 5 and emb[0].split("\t")[0] == "antonym"
    assert all(len(row.split("\t")) == 9 for row in emb)
    with open(p("transe.json")) as fh:
        tr = json.load(fh)
    assert len(tr["epoch_losses"]) == 5
    rerun = run("transe", "--kg", p("cn.tsv"), "--out", p("rel_emb2.tsv"),
                "--dim", "8", "--epochs", "5", "--neg", "1")
    assert read(p("rel_emb2.tsv")) == read(p("rel_emb.tsv"))  # same seed

    # --- data-dir resolution, usage and data errors ------------------------------
    run("stats", "--graph", "cn.tsv", "--out", p("env_stats.json"),
        env={"KGPROBE_DATA_DIR": tmp})
    bad = run("definitely-not-a-command", expect=1)
    assert "Usage" in bad.stderr or "usage" in bad.stderr
    bad = run("stats", "--graph", p("cn.tsv"), expect=1)  # missing --out
    assert bad.stderr
    bad = run("stats", "--graph", p("missing.tsv"), "--out", p("x.json"),
              expect=2)
    assert "kg-probe:" in bad.stderr

    print("cli integration: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
