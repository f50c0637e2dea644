#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <nlohmann/json.hpp>

#include "test_util.hpp"
#include "toksmith/costmodel.hpp"
#include "toksmith/persistence.hpp"

namespace toksmith {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new testing::TempDir();
    const Result r = run("--seed 3 train --manifest " + manifest() +
                         " --scheme gpt4 --vocab 400 --chars 60000 --out " + path("tok.json"));
    ASSERT_EQ(r.code, 0) << r.err;
  }
  static void TearDownTestSuite() {
    delete dir_;
    dir_ = nullptr;
  }

  static std::string path(const std::string& name) { return (dir_->path() / name).string(); }
  static std::string manifest() { return std::string(TOKSMITH_DATA_DIR) + "/toy/manifest.json"; }

  static Result run(const std::string& args, const std::string& stdin_text = "") {
    const std::string in = path("stdin.txt"), out = path("stdout.txt"), err = path("stderr.txt");
    write_file(in, stdin_text);
    const std::string cmd = std::string("\"") + TOKSMITH_CLI + "\" " + args + " < \"" + in +
                            "\" > \"" + out + "\" 2> \"" + err + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out), read_file(err)};
  }

  static testing::TempDir* dir_;
};

testing::TempDir* CliTest::dir_ = nullptr;

TEST_F(CliTest, EncodeDecodeRoundTrip) {
  const std::string text = "def main():\n\tprint(\"h\xC3\xA9llo, \xE4\xB8\x96\xE7\x95\x8C\")  # 12345\n";
  const Result enc = run("encode --tok " + path("tok.json"), text);
  ASSERT_EQ(enc.code, 0) << enc.err;
  const Result dec = run("decode --tok " + path("tok.json"), enc.out);
  ASSERT_EQ(dec.code, 0) << dec.err;
  EXPECT_EQ(dec.out, text);

  const Result drop = run("--seed 9 encode --dropout 0.5 --tok " + path("tok.json"), text);
  ASSERT_EQ(drop.code, 0) << drop.err;
  EXPECT_EQ(run("decode --tok " + path("tok.json"), drop.out).out, text);
}

TEST_F(CliTest, TrainingIsDeterministic) {
  const std::string args = " train --manifest " + manifest() + " --scheme punct --vocab 350 --chars 30000 --out ";
  ASSERT_EQ(run("--seed 5 --threads 1" + args + path("a.json")).code, 0);
  ASSERT_EQ(run("--seed 5 --threads 3" + args + path("b.json")).code, 0);
  ASSERT_EQ(run("--seed 6 --threads 1" + args + path("c.json")).code, 0);
  EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
  EXPECT_NE(read_file(path("a.json")), read_file(path("c.json")));
}

TEST_F(CliTest, EvalAgainstItselfPrintsOnes) {
  const Result r = run("eval --manifest " + manifest() + " --baseline " + path("tok.json") +
                       " --tok self=" + path("tok.json") + " --json " + path("eval.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("self"), std::string::npos);
  EXPECT_NE(r.out.find("1.00"), std::string::npos);
  EXPECT_EQ(r.out.find("0.99"), std::string::npos);
  EXPECT_NO_THROW(nlohmann::json::parse(read_file(path("eval.json"))));
}

TEST_F(CliTest, VocabSweepWritesLoadableCurve) {
  const Result r = run("vocab-sweep --manifest " + manifest() +
                       " --chars 60000 --vocabs 300,350,400 --anchor 350 --out " + path("curve.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const NslCurve curve = NslCurve::parse(read_file(path("curve.json")));
  EXPECT_EQ(curve.anchor(), 350u);
  EXPECT_EQ(curve.at(350), 1.0);
  EXPECT_GE(curve.at(300), curve.at(350));
  EXPECT_GE(curve.at(350), curve.at(400));
}

TEST_F(CliTest, GroupedQueryMemoryOptimumIsNoLarger) {
  write_file(path("big_curve.json"),
             R"({"anchor": 32000, "points": [[10000, 1.13], [16000, 1.07], [32000, 1.0],)"
             R"( [64000, 0.94], [100000, 0.915], [128000, 0.9], [256000, 0.87]]})");
  auto best = [&](const std::string& kv) {
    const Result r = run("optimize-memory --dim 4096 --layers 32 --heads 32 --kv-heads " + kv +
                         " --batch 8 --seqlen-32k 4096 --curve " + path("big_curve.json"));
    EXPECT_EQ(r.code, 0) << r.err;
    const auto pos = r.out.find("best_vocab: ");
    return std::stoul(r.out.substr(pos + 12));
  };
  const auto mha = best("32");
  const auto gqa = best("4");
  EXPECT_LE(gqa, mha);
  EXPECT_EQ(mha, 64000u);
}

TEST_F(CliTest, InferenceFromProxyBench) {
  const Result bench = run("bench-proxy --dim 16 --layers 1 --vocabs 10000,32000,64000 --repeats 1 --out " +
                           path("obs.json"));
  ASSERT_EQ(bench.code, 0) << bench.err;
  const Result r = run("optimize-inference --observations " + path("obs.json") + " --curve " +
                       path("big_curve.json") + " --grid 10000,32000,64000");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("best_vocab: "), std::string::npos);
}

TEST_F(CliTest, MergeFvtHeal) {
  ASSERT_EQ(run("merge --base " + path("tok.json") + " --domain " + path("tok.json") +
                " --filter gpt4 --out " + path("merged.json")).code, 0);
  EXPECT_EQ(read_file(path("merged.json")), read_file(path("tok.json")));

  const Tokenizer tok = load_tokenizer(path("tok.json"));
  save_embeddings(EmbeddingMatrix(tok.vocab_size(), 3), path("old.emb"));
  const Result fvt = run("fvt --old-tok " + path("tok.json") + " --new-tok " + path("merged.json") +
                         " --old-emb " + path("old.emb") + " --out-emb " + path("new.emb"));
  ASSERT_EQ(fvt.code, 0) << fvt.err;
  EXPECT_EQ(load_embeddings(path("new.emb")).rows(), tok.vocab_size());

  const Result heal = run("heal --tok " + path("tok.json") + " --prompt 'import o' --strategy nstep");
  ASSERT_EQ(heal.code, 0) << heal.err;
  EXPECT_TRUE(nlohmann::json::parse(heal.out).is_object());
}

TEST_F(CliTest, ErrorsArePrefixed) {
  for (const std::string& args :
       {std::string("encode --tok ") + path("missing.json"),
        std::string("decode --ids '1 2 999999' --tok ") + path("tok.json"),
        std::string("train --manifest ") + manifest() + " --mix code=0.5 --out " + path("x.json"),
        std::string("heal --tok ") + path("tok.json") + " --prompt x --strategy sideways",
        std::string("bogus-command"), std::string("encode --tok")}) {
    const Result r = run(args);
    EXPECT_NE(r.code, 0) << args;
    EXPECT_EQ(r.err.rfind("error:", 0), 0u) << args << " -> " << r.err;
  }
}

TEST_F(CliTest, ConfigFile) {
  write_file(path("ok.toml"), "seed = 3\n[encode]\ntok = \"" + path("tok.json") + "\"\ntext = \"abc\"\n");
  const Result ok = run("--config " + path("ok.toml") + " encode");
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out, run("encode --text abc --tok " + path("tok.json")).out);

  write_file(path("bad.toml"), "seed = 3\nflavour = \"x\"\n");
  const Result bad = run("--config " + path("bad.toml") + " encode --tok " + path("tok.json"));
  EXPECT_NE(bad.code, 0);
  EXPECT_EQ(bad.err.rfind("error:", 0), 0u) << bad.err;
}

}  // namespace
}  // namespace toksmith
