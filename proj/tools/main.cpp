#include <catlaw.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// 0 laws hold, 1 law failure, 2 malformed/unsupported input.
int exit_for(catlaw_status st) {
  if (st == CATLAW_OK) return 0;
  return st == CATLAW_E_INVALID ? 1 : 2;
}

int fail(catlaw_status st, char* err) {
  std::cerr << "error: " << (err ? err : "unknown") << "\n";
  catlaw_string_free(err);
  return exit_for(st);
}

bool read_input(const std::string& path, std::string& out) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

int write_output(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

// Flag wins over the environment; 0 leaves the library default in place.
long long cap_value(long long flag) {
  if (flag > 0) return flag;
  const char* env = std::getenv("CATLAW_MAX_CANDIDATES");
  if (env && *env) return std::atoll(env);
  return 0;
}

// Fills *doc or returns the exit code (-1 means success).
int parse_doc(const std::string& path, catlaw_doc** doc) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  char* err = nullptr;
  catlaw_status st = catlaw_doc_parse(text.c_str(), doc, &err);
  if (st != CATLAW_OK) return fail(st, err);
  return -1;
}

int cmd_check(const std::string& path, const std::string& form,
              const std::string& report_fmt) {
  catlaw_doc* doc = nullptr;
  int rc = parse_doc(path, &doc);
  if (rc >= 0) return rc;
  char* err = nullptr;
  catlaw_report* rep = nullptr;
  catlaw_status st = catlaw_check(doc, form.c_str(), &rep, &err);
  if (st != CATLAW_OK) {
    catlaw_doc_free(doc);
    return fail(st, err);
  }
  char* text = nullptr;
  st = catlaw_report_render(rep, report_fmt.c_str(), &text, &err);
  if (st != CATLAW_OK) {
    catlaw_report_free(rep);
    catlaw_doc_free(doc);
    return fail(st, err);
  }
  std::cout << text;
  int code = catlaw_report_exit_code(rep);
  catlaw_string_free(text);
  catlaw_report_free(rep);
  catlaw_doc_free(doc);
  return code;
}

int cmd_convert(const std::string& path, const std::string& to,
                const std::string& out_path) {
  catlaw_doc* doc = nullptr;
  int rc = parse_doc(path, &doc);
  if (rc >= 0) return rc;
  char* err = nullptr;
  char* text = nullptr;
  catlaw_status st = catlaw_convert(doc, to.c_str(), &text, &err);
  catlaw_doc_free(doc);
  if (st != CATLAW_OK) return fail(st, err);
  rc = write_output(out_path, text);
  catlaw_string_free(text);
  return rc;
}

int cmd_compose(const std::string& path, const std::string& out_path) {
  catlaw_doc* doc = nullptr;
  int rc = parse_doc(path, &doc);
  if (rc >= 0) return rc;
  char* err = nullptr;
  char* text = nullptr;
  catlaw_status st = catlaw_compose(doc, &text, &err);
  catlaw_doc_free(doc);
  if (st != CATLAW_OK) return fail(st, err);
  rc = write_output(out_path, text);
  catlaw_string_free(text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("catlaw ") + catlaw_version() +
               ": monad structures on finite categories"};
  app.require_subcommand(1);

  std::string check_path, check_form, check_report = "text";
  CLI::App* check =
      app.add_subcommand("check", "run the law checks the document selects");
  check->add_option("file", check_path, "document path ('-' for stdin)")
      ->required();
  check->add_option("--form", check_form,
                    "law presentation; defaults: distlaw monoidal, "
                    "kl-morphism cat, em-morphism noiter");
  check->add_option("--report", check_report, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string conv_path, conv_to, conv_out;
  CLI::App* convert = app.add_subcommand(
      "convert", "convert a document between presentations");
  convert->add_option("file", conv_path, "document path ('-' for stdin)")
      ->required();
  convert
      ->add_option("--to", conv_to,
                   "monoidal | extensive | alpha | lambda | algebra")
      ->required();
  convert->add_option("-o,--output", conv_out, "output path (default stdout)");

  std::string comp_path, comp_out;
  CLI::App* compose = app.add_subcommand(
      "compose", "composite monad from a valid distributive law");
  compose->add_option("file", comp_path, "distlaw document path")->required();
  compose->add_option("-o,--output", comp_out, "output path (default stdout)");

  std::string enum_what, enum_family, enum_form = "monoidal";
  bool enum_items = false;
  int enum_s = 0;
  int enum_t = 0;
  long long enum_cap = 0;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "exhaustive enumeration, hard-capped");
  enumerate
      ->add_option("what", enum_what,
                   "monads | closures | distlaw-candidates | posets | monoids")
      ->required();
  enumerate
      ->add_option("family", enum_family,
                   "chain:N | poset:N:i<j,... | posets:N | monoid:... | "
                   "monoids:N")
      ->required();
  enumerate->add_flag("--items", enum_items, "include items, not just counts");
  enumerate->add_option("--form", enum_form,
                        "monad form for what=monads (monoidal | extensive)");
  enumerate->add_option("--s", enum_s,
                        "s monad index for what=distlaw-candidates");
  enumerate->add_option("--t", enum_t,
                        "t monad index for what=distlaw-candidates");
  enumerate->add_option("--max-candidates", enum_cap,
                        "enumeration cap (or env CATLAW_MAX_CANDIDATES)");

  std::string cmp_what, cmp_family;
  long long cmp_cap = 0;
  CLI::App* oracle =
      app.add_subcommand("oracle", "independent cross-checks on a family");
  oracle->require_subcommand(1);
  CLI::App* cmp = oracle->add_subcommand(
      "compare", "compare independently computed structures");
  cmp->add_option("what", cmp_what,
                  "monad-forms | closure-monads | distlaw-forms")
      ->required();
  cmp->add_option("family", cmp_family, "instance family")->required();
  cmp->add_option("--max-candidates", cmp_cap,
                  "enumeration cap (or env CATLAW_MAX_CANDIDATES)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (check->parsed()) return cmd_check(check_path, check_form, check_report);
  if (convert->parsed()) return cmd_convert(conv_path, conv_to, conv_out);
  if (compose->parsed()) return cmd_compose(comp_path, comp_out);
  if (enumerate->parsed()) {
    char* err = nullptr;
    char* json = nullptr;
    catlaw_status st = catlaw_enumerate(
        enum_what.c_str(), enum_family.c_str(), enum_form.c_str(),
        enum_items ? 1 : 0, enum_s, enum_t, cap_value(enum_cap), &json, &err);
    if (st != CATLAW_OK) return fail(st, err);
    std::cout << json;
    catlaw_string_free(json);
    return 0;
  }
  if (cmp->parsed()) {
    int agree = 0;
    char* err = nullptr;
    char* json = nullptr;
    catlaw_status st =
        catlaw_oracle_compare(cmp_what.c_str(), cmp_family.c_str(),
                              cap_value(cmp_cap), &agree, &json, &err);
    if (st != CATLAW_OK) return fail(st, err);
    std::cout << json;
    catlaw_string_free(json);
    return agree ? 0 : 1;
  }
  return 2;
}
