#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fieldquanta/cli.hpp"
#include "json.hpp"

using namespace fieldquanta;

namespace {

const std::filesystem::path kData = FIELDQUANTA_TEST_DATA;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

RunConfig builtin_config(const std::string& name, const std::string& format = "text", std::uint64_t seed = 0) {
  RunConfig cfg;
  cfg.builtin = name;
  cfg.format = format;
  cfg.seed = seed;
  return cfg;
}

CliRun classify(const RunConfig& cfg) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::classify_command(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const FieldReport& field(const SpectrumReport& r, const std::string& name) {
  for (const auto& f : r.fields) {
    if (f.name == name) return f;
  }
  throw std::runtime_error("no field " + name);
}

}  // namespace

TEST(Classify, ComplexKleinGordon) {
  const SpectrumReport r = cli::classify(catalog::builtin("complex-kg"), builtin_config("complex-kg"));
  ASSERT_EQ(r.fields.size(), 1u);
  const FieldReport& f = r.fields[0];
  EXPECT_EQ(f.real_type, "SecretlyComplex");
  EXPECT_EQ(f.sector_dim, 1);
  EXPECT_NE(std::find(f.labels.begin(), f.labels.end(), "CPT"), f.labels.end());
  EXPECT_TRUE(f.antiparticles);
  EXPECT_EQ(f.complex_structure, (Rows{{0.0, -1.0}, {1.0, 0.0}}));
  EXPECT_TRUE(r.all_checks_passed());
}

TEST(Classify, Schroedinger) {
  const SpectrumReport r = cli::classify(catalog::builtin("schroedinger"), builtin_config("schroedinger"));
  const FieldReport& f = r.fields[0];
  EXPECT_FALSE(f.antiparticles);
  EXPECT_NE(f.antiparticle_reason.find("no complex-linear parity-time symmetry"), std::string::npos);
}

TEST(Classify, StandardModel) {
  RunConfig cfg = builtin_config("standard-model");
  cfg.modes = ModesOptions{64, 2.0 * 3.141592653589793};
  const SpectrumReport r = cli::classify(catalog::builtin("standard-model"), cfg);
  ASSERT_TRUE(r.breaking.has_value());
  EXPECT_EQ(r.breaking->stabilizer_coefficients.size(), 1u);
  EXPECT_EQ(r.gauge_physical_dof, (std::vector<int>{6, 16, 2}));
  EXPECT_EQ(r.gauge_absorbed_dof, 12);
  EXPECT_EQ(r.breaking->goldstone_count, 3);
  EXPECT_EQ(r.breaking->massive_vectors, 3);
  EXPECT_EQ(r.breaking->physical_scalars, 1);
  EXPECT_EQ(r.breaking->unbroken_factors, (std::vector<std::string>{"su(3)"}));
  ASSERT_EQ(r.breaking->residual_blocks.size(), 3u);
  EXPECT_EQ(r.breaking->residual_blocks[0].real_type, "SecretlyComplex");
  EXPECT_EQ(field(r, "gauge-su3").real_type, "HonestlyReal");
  EXPECT_TRUE(field(r, "quark-left").antiparticles);
  for (const auto& f : r.fields) {
    ASSERT_TRUE(f.modes.has_value()) << f.name;
    EXPECT_TRUE(f.modes->agrees_with_labels) << f.name;
  }
  EXPECT_TRUE(r.all_checks_passed());
}

TEST(Classify, FieldErrorsCarryTheFieldName) {
  TheorySpec t = catalog::builtin("real-kg");
  FieldSpec reducible = t.fields[0];
  reducible.name = "pair";
  reducible.internal.dim = 2;
  reducible.discrete_candidates.clear();
  t.fields.push_back(reducible);
  try {
    cli::classify(t, builtin_config("real-kg"));
    FAIL() << "expected IrreducibilityViolated";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IrreducibilityViolated);
    const std::string what = e.what();
    EXPECT_NE(what.find("field 'pair'"), std::string::npos) << what;
    EXPECT_EQ(what.find("IrreducibilityViolated", 5), std::string::npos) << what;  // prefix only once
  }
}

TEST(Command, DeterministicJson) {
  const CliRun a = classify(builtin_config("standard-model", "json", 42));
  const CliRun b = classify(builtin_config("standard-model", "json", 42));
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Command, JsonIsValidAndRoundTrips) {
  for (const auto& name : catalog::builtin_names()) {
    RunConfig cfg = builtin_config(name, "json", 7);
    cfg.modes = ModesOptions{};
    const CliRun run = classify(cfg);
    ASSERT_EQ(run.code, 0) << name << ": " << run.err;
    const auto doc = nlohmann::json::parse(run.out);
    EXPECT_EQ(doc.at("schema"), "fieldquanta-report/1");
    const SpectrumReport parsed = report::from_json(run.out);
    EXPECT_EQ(report::to_json(parsed), run.out) << name;
    EXPECT_EQ(parsed, cli::classify(catalog::builtin(name), cfg)) << name;
  }
}

TEST(Command, TextMentionsEveryField) {
  const CliRun run = classify(builtin_config("standard-model"));
  ASSERT_EQ(run.code, 0);
  for (const char* name : {"lepton-left", "quark-left", "lepton-right", "quark-right", "gauge-su2", "gauge-su3",
                           "gauge-u1", "higgs"}) {
    EXPECT_NE(run.out.find(std::string("field ") + name), std::string::npos) << name;
  }
  EXPECT_NE(run.out.find("physical dof 6, 16, 2"), std::string::npos);
}

TEST(Command, SpecFileInput) {
  RunConfig cfg;
  cfg.spec_path = kData / "complex_kg.json";
  const CliRun run = classify(cfg);
  EXPECT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("SecretlyComplex"), std::string::npos);
}

TEST(Command, OutFile) {
  RunConfig cfg = builtin_config("real-kg", "json");
  cfg.out = std::filesystem::temp_directory_path() / "fieldquanta_cli_out.json";
  const CliRun run = classify(cfg);
  ASSERT_EQ(run.code, 0);
  EXPECT_TRUE(run.out.empty());
  std::ifstream in(*cfg.out);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NO_THROW(report::from_json(text.str()));
  std::filesystem::remove(*cfg.out);
}

TEST(ExitCodes, InputErrorsAreTwo) {
  EXPECT_EQ(classify(builtin_config("no-such-theory")).code, 2);
  RunConfig both = builtin_config("real-kg");
  both.spec_path = kData / "complex_kg.json";
  EXPECT_EQ(classify(both).code, 2);
  RunConfig neither;
  EXPECT_EQ(classify(neither).code, 2);
  RunConfig bad_format = builtin_config("real-kg", "yaml");
  EXPECT_EQ(classify(bad_format).code, 2);
  RunConfig bad_tol = builtin_config("real-kg");
  bad_tol.tol.eps_rank = 0.0;
  EXPECT_EQ(classify(bad_tol).code, 2);
  RunConfig not_closed;
  not_closed.spec_path = kData / "not_closed.json";
  const CliRun r = classify(not_closed);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Lx"), std::string::npos) << r.err;
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(cli::exit_code(ErrorCode::Inconsistency), 3);
  EXPECT_EQ(cli::exit_code(ErrorCode::ParseError), 2);
  EXPECT_EQ(cli::exit_code(ErrorCode::ValidationError), 2);
  EXPECT_EQ(cli::exit_code(ErrorCode::IrreducibilityViolated), 2);
}

TEST(Validate, Command) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::validate_command(kData / "complex_kg.json", out, err), 0);
  EXPECT_EQ(cli::validate_command(kData / "dim_mismatch.json", out, err), 2);
  EXPECT_NE(err.str().find("dim mismatch"), std::string::npos) << err.str();
}

TEST(Demo, AllDemosRun) {
  for (const auto& name : cli::demo_names()) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::demo_command(name, out, err), 0) << name << err.str();
    EXPECT_FALSE(out.str().empty());
  }
  std::ostringstream out, err;
  EXPECT_EQ(cli::demo_command("nope", out, err), 2);
}

TEST(Demo, So2ShowsEigenvectors) {
  std::ostringstream out, err;
  cli::demo_command("so2-vs-so3", out, err);
  EXPECT_NE(out.str().find("(1.0000, -1.0000i)"), std::string::npos);
  EXPECT_NE(out.str().find("(1.0000, 1.0000i)"), std::string::npos);
}

TEST(Modes, CsvCommand) {
  RunConfig cfg = builtin_config("complex-kg");
  cfg.modes = ModesOptions{16, 6.283185307179586};
  std::ostringstream a, b, err;
  EXPECT_EQ(cli::modes_command(cfg, "phi", a, err), 0) << err.str();
  cli::modes_command(cfg, "", b, err);
  EXPECT_EQ(a.str(), b.str());
  const std::string csv = a.str();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 16 * 2);
  std::ostringstream c;
  EXPECT_EQ(cli::modes_command(cfg, "ghost", c, err), 2);
}

TEST(Options, ParseModes) {
  EXPECT_EQ(cli::parse_modes("32").sites, 32);
  EXPECT_DOUBLE_EQ(cli::parse_modes("32,3.5").length, 3.5);
  EXPECT_THROW(cli::parse_modes("abc"), Error);
  EXPECT_THROW(cli::parse_modes("32,"), Error);
  EXPECT_THROW(cli::parse_modes("0"), Error);
}

TEST(Options, SeedFromEnvironment) {
  ::setenv("FIELDQUANTA_SEED", "1234", 1);
  EXPECT_EQ(cli::default_seed(), 1234u);
  ::setenv("FIELDQUANTA_SEED", "12x", 1);
  EXPECT_EQ(cli::default_seed(), 0u);
  ::unsetenv("FIELDQUANTA_SEED");
  EXPECT_EQ(cli::default_seed(), 0u);
}

TEST(Report, FromJsonRejectsOtherSchemas) {
  EXPECT_THROW(report::from_json(R"({"schema": "something-else/1"})"), Error);
  EXPECT_THROW(report::from_json("not json"), Error);
}
