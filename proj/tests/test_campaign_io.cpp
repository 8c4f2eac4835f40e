#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ttensor/campaign.hpp"
#include "ttensor/generators.hpp"
#include "ttensor/tensor_io.hpp"

using namespace ttensor;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / ("ttensor_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    const auto out = temp_dir() / "cli_out.txt";
    const std::string cmd = std::string(TTENSOR_CLI) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out);
        output->assign(std::istreambuf_iterator<char>(in), {});
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string dump_report(const CampaignReport& r) {
    std::string s;
    for (const auto& c : r.certificates) s += to_json(c).dump() + "\n";
    return s + to_json(r.summary, r).dump();
}

}  // namespace

TEST(Campaign, ZeroTrials) {
    CampaignOptions o;
    o.trials = 0;
    const CampaignReport r = run_campaign(TheoremId::loewner_heinz, o);
    EXPECT_TRUE(r.certificates.empty());
    EXPECT_EQ(r.summary.violations, 0u);
    EXPECT_FALSE(r.summary.worst_ratio.has_value());
}

TEST(Campaign, LoewnerHeinzHolds) {
    CampaignOptions o;
    o.trials = 100;
    o.seed = 5;
    const CampaignReport r = run_campaign(TheoremId::loewner_heinz, o);
    EXPECT_EQ(r.summary.trials, 100u);
    EXPECT_EQ(r.summary.violations, 0u);
    EXPECT_EQ(r.summary.failures, 0u);
    EXPECT_EQ(r.certificates.size(), 100u);
}

TEST(Campaign, DeterministicAcrossThreadCounts) {
    for (TheoremId id : {TheoremId::furuta, TheoremId::young_witness, TheoremId::hoffman_wielandt}) {
        CampaignOptions o;
        o.trials = 30;
        o.seed = 99;
        o.threads = 1;
        const std::string one = dump_report(run_campaign(id, o));
        o.threads = 4;
        EXPECT_EQ(dump_report(run_campaign(id, o)), one) << to_string(id);
    }
}

TEST(Campaign, TrialsAreReconstructible) {
    CampaignOptions o;
    o.trials = 12;
    o.seed = 3;
    const CampaignReport r = run_campaign(TheoremId::heinz_family, o);
    const CertificateList again = run_trial(TheoremId::heinz_family, o, 7);
    std::size_t matched = 0;
    for (const auto& c : r.certificates) {
        if (c.instance.trial != 7) continue;
        ASSERT_LT(matched, again.size());
        EXPECT_EQ(to_json(c).dump(), to_json(again[matched]).dump());
        ++matched;
    }
    EXPECT_EQ(matched, again.size());
}

TEST(Campaign, LiteralAmGmFindsErratum) {
    CampaignOptions o;
    o.trials = 20;
    o.seed = 1;
    o.mode = Mode::literal;
    const CampaignReport r = run_campaign(TheoremId::am_gm, o);
    EXPECT_GE(r.summary.violations, 1u);
    ASSERT_TRUE(r.summary.worst_ratio.has_value());
    EXPECT_LT(*r.summary.worst_ratio, -1.0);
}

TEST(Campaign, ExponentOverride) {
    CampaignOptions o;
    o.trials = 5;
    o.exponent = 0.3;
    for (const auto& c : run_campaign(TheoremId::loewner_heinz, o).certificates)
        EXPECT_EQ(c.instance.params.at("r"), 0.3);
}

TEST(TensorIo, RoundTrip) {
    RngStream rng(60);
    const Tensor3 a = gen_random(2, 3, 4, rng);
    const auto path = temp_dir() / "a.json";
    write_tensor_file(path, a);
    EXPECT_EQ(read_real_tensor_file(path), a);

    const ComplexTensor3 z = complexify(a, gen_random(2, 3, 4, rng));
    write_tensor_file(path, z);
    const AnyTensor back = read_tensor_file(path);
    ASSERT_TRUE(std::holds_alternative<ComplexTensor3>(back));
    EXPECT_EQ(std::get<ComplexTensor3>(back), z);
    EXPECT_THROW(read_real_tensor_file(path), TensorFileError);
}

TEST(TensorIo, RejectsMalformed) {
    using nlohmann::json;
    EXPECT_THROW(tensor_from_json(json::parse(R"({"dims":[1,1,2],"data":[1]})")), TensorFileError);
    EXPECT_THROW(tensor_from_json(json::parse(R"({"dims":[1,1,1],"data":[1],"extra":0})")), TensorFileError);
    EXPECT_THROW(tensor_from_json(json::parse(R"({"dims":[0,1,1],"data":[]})")), TensorFileError);
    EXPECT_THROW(tensor_from_json(json::parse(R"({"dims":[1,1],"data":[1]})")), TensorFileError);
    EXPECT_THROW(tensor_from_json(json::parse(R"({"dims":[1,1,1],"data_re":[1]})")), TensorFileError);
    EXPECT_THROW(tensor_from_json(json::parse(R"({"dims":[1,1,1],"data":["x"]})")), TensorFileError);
    EXPECT_THROW(tensor_from_json(json::parse(R"([1,2,3])")), TensorFileError);
    EXPECT_THROW(read_tensor_file(temp_dir() / "missing.json"), TensorFileError);
}

TEST(Cli, ProductAndEig) {
    const auto dir = temp_dir();
    write_tensor_file(dir / "x.json", Tensor3(2, 2, 2, {2, 1, 1, 1, 0, 0, 0, 0}));
    std::string out;
    ASSERT_EQ(run_cli("tprod " + (dir / "x.json").string() + " " + (dir / "x.json").string() + " -o " +
                          (dir / "x2.json").string(),
                      &out),
              0)
        << out;
    const Tensor3 x2 = read_real_tensor_file(dir / "x2.json");
    EXPECT_EQ(x2(0, 0, 0), 5.0);
    EXPECT_EQ(x2(0, 1, 0), 3.0);

    ASSERT_EQ(run_cli("eig " + (dir / "x.json").string() + " --format json", &out), 0) << out;
    const nlohmann::json j = nlohmann::json::parse(out);
    EXPECT_FALSE(j.empty());
}

TEST(Cli, ExitCodes) {
    std::string out;
    EXPECT_EQ(run_cli("check loewner-heinz --n 2 --n3 2 --trials 5 --seed 1", &out), 0) << out;
    EXPECT_EQ(run_cli("check am-gm --mode literal --trials 50 --seed 1", &out), 1) << out;
    EXPECT_NE(out.find("VIOLATED"), std::string::npos);
    EXPECT_EQ(run_cli("check nosuch", &out), 2);
    EXPECT_EQ(run_cli("eig /nonexistent/file.json", &out), 2);
    EXPECT_EQ(run_cli("check loewner-heinz --trials -3", &out), 2);
    EXPECT_EQ(run_cli("--help", &out), 0);
    EXPECT_NE(out.find("hoffman-wielandt"), std::string::npos);
}

TEST(Cli, JsonCampaignOutput) {
    std::string out;
    ASSERT_EQ(run_cli("check schur --n 2 --n3 3 --trials 4 --seed 2 --json", &out), 0) << out;
    std::istringstream lines(out);
    std::string line, last;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        last = line;
        ++count;
        EXPECT_TRUE(nlohmann::json::accept(line)) << line;
    }
    EXPECT_EQ(count, 5u);
    EXPECT_TRUE(nlohmann::json::parse(last).contains("summary"));
}
