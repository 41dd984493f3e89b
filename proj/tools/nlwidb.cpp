// nlwidb: English questions in, SQL and result tables out.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nlwidb/catalog.hpp"
#include "nlwidb/pipeline.hpp"
#include "nlwidb/report.hpp"
#include "nlwidb/server.hpp"

namespace {

constexpr int kPipelineError = 1;
constexpr int kConfigError = 2;
constexpr int kUsageError = 2;

std::optional<nlwidb::Engine> load_engine(const std::string& path) {
    try {
        return nlwidb::Engine(nlwidb::load_catalog_file(path));
    } catch (const nlwidb::CatalogError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        for (const auto& v : e.detail()) std::cerr << "  - " << v << '\n';
        return std::nullopt;
    }
}

void print_results(const nlwidb::QueryResponse& r) {
    for (const auto& rs : r.results) std::cout << nlwidb::render_table(rs);
}

int run_query(const nlwidb::Engine& engine, const std::string& question, bool trace, bool json) {
    nlwidb::Answer a = engine.answer(question);
    if (json) {
        std::cout << nlwidb::to_json(a).dump(2) << '\n';
    } else if (trace) {
        std::cout << nlwidb::render_trace(a);
    } else if (a.ok()) {
        print_results(*a.response);
    }
    if (!a.ok() && !json && !trace) std::cerr << "error [" << a.error->stage << "]: " << a.error->message << '\n';
    return a.ok() ? 0 : kPipelineError;
}

int run_batch(const nlwidb::Engine& engine, const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open '" << file << "'\n";
        return kPipelineError;
    }
    int failures = 0;
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++n;
        std::cout << "[" << n << "] " << line << '\n';
        nlwidb::Answer a = engine.answer(line);
        if (a.ok()) {
            std::cout << "template: " << a.response->template_code << " (" << nlwidb::to_string(a.response->builder)
                      << ")\n";
            for (const auto& sql : a.response->sql) std::cout << "sql: " << sql << '\n';
            print_results(*a.response);
        } else {
            ++failures;
            std::cout << "error [" << a.error->stage << "]: " << a.error->message << '\n';
        }
        std::cout << '\n';
    }
    std::cout << n - failures << "/" << n << " questions answered\n";
    return failures == 0 ? 0 : kPipelineError;
}

int run_serve(const nlwidb::Engine& engine, const std::string& address, const std::string& static_dir) {
    auto colon = address.rfind(':');
    if (colon == std::string::npos) {
        std::cerr << "--bind expects host:port, got '" << address << "'\n";
        return kConfigError;
    }
    std::string host = address.substr(0, colon);
    int port = 0;
    try {
        port = std::stoi(address.substr(colon + 1));
    } catch (const std::exception&) {
        std::cerr << "invalid port in '" << address << "'\n";
        return kConfigError;
    }
    try {
        nlwidb::Service service(engine, static_dir.empty() ? std::nullopt
                                                           : std::optional<std::filesystem::path>(static_dir));
        int bound = service.bind(host, port);
        std::cout << "listening on http://" << host << ":" << bound << std::endl;
        service.run();
    } catch (const std::exception& e) {
        std::cerr << "serve: " << e.what() << '\n';
        return kConfigError;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Natural-language questions over the UNIVERSITY database"};
    app.require_subcommand(1);

    std::string config = NLWIDB_DEFAULT_CONFIG;
    app.add_option("--config", config, "Configuration document (JSON)")->envname("NLWIDB_CONFIG");

    auto* query = app.add_subcommand("query", "Answer one question");
    std::string question;
    bool trace = false;
    bool json = false;
    query->add_option("question", question, "The question, values in double quotes")->required();
    query->add_flag("--trace", trace, "Print every pipeline stage");
    query->add_flag("--json", json, "Emit the response as JSON");

    auto* batch = app.add_subcommand("batch", "Answer one question per line of a file");
    std::string batch_file;
    batch->add_option("file", batch_file)->required();

    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    std::string bind_address = "127.0.0.1:8080";
    std::string static_dir;
    serve->add_option("--bind", bind_address, "host:port")->capture_default_str();
    serve->add_option("--static", static_dir, "Directory served under /");

    auto* validate = app.add_subcommand("validate-config", "Load the configuration and report violations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    auto engine = load_engine(config);
    if (!engine) return kConfigError;

    if (*validate) {
        std::cout << "ok\n";
        return 0;
    }
    if (*query) return run_query(*engine, question, trace, json);
    if (*batch) return run_batch(*engine, batch_file);
    if (*serve) return run_serve(*engine, bind_address, static_dir);
    return 0;
}
