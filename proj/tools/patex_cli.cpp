// patex: mine networks, print orderings and layouts, export cheat sheets, run the service.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <httplib.h>

#include "patex/explain/cheatsheet.hpp"
#include "patex/graph/io.hpp"
#include "patex/layout/geometry.hpp"
#include "patex/layout/seriation.hpp"
#include "patex/layout/stress.hpp"
#include "patex/motif/mine.hpp"
#include "patex/service/http.hpp"

namespace fs = std::filesystem;
using namespace patex;

namespace {

struct InputArgs {
    std::string path;
    std::string format;  // empty: from the extension
    bool directed = false;
};

void add_input(CLI::App* cmd, InputArgs& in) {
    cmd->add_option("input", in.path, "network file (.json or .csv)")->required();
    cmd->add_option("--format", in.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--directed", in.directed, "csv links are directed");
}

Network read_network(const InputArgs& in) {
    std::ifstream file(in.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot read '" + in.path + "'");
    NetworkFormat fmt = in.format.empty() ? format_for_path(in.path) : *parse_network_format(in.format);
    return load_network(file, fmt, LoadOptions{in.directed});
}

std::string joined(const std::set<std::string>& ids, std::size_t limit) {
    std::string out;
    std::size_t k = 0;
    for (const auto& id : ids) {
        if (k == limit) return out + ", ...";
        out += (k++ ? ", " : "") + id;
    }
    return out;
}

void print_table(const MiningResult& r) {
    int key_w = 5;
    for (const auto& i : r.instances) key_w = std::max(key_w, static_cast<int>(i.key.size()) + 2);
    std::cout << std::left << std::setw(16) << "kind" << std::right << std::setw(6) << "nodes" << std::setw(7) << "links"
              << std::setw(9) << "density" << "  " << std::left << std::setw(key_w) << "key" << "members\n";
    for (const auto& i : r.instances) {
        std::ostringstream density;
        density << std::fixed << std::setprecision(3) << i.facts.density;
        std::cout << std::left << std::setw(16) << to_string(i.kind) << std::right << std::setw(6) << i.facts.nodes
                  << std::setw(7) << i.facts.links << std::setw(9) << density.str() << "  " << std::left
                  << std::setw(key_w) << i.key << joined(i.elements.nodes, 8) << "\n";
    }
    std::cout << r.instances.size() << " instances\n";
}

int cmd_mine(const InputArgs& in, bool table) {
    auto result = mine_top_down(read_network(in));
    if (table) print_table(result);
    else std::cout << to_json(result).dump(2) << "\n";
    return 0;
}

int cmd_order(const InputArgs& in) {
    Network net = read_network(in);
    NodeOrdering o = barycenter_order(net);
    nlohmann::json ids = nlohmann::json::array();
    for (std::size_t k = 0; k < o.size(); ++k) ids.push_back(net.nodes()[o.node_at(k)].id);
    nlohmann::json out = {{"order", ids}, {"bandwidth", bandwidth(net, o)}, {"cost", arrangement_cost(net, o)}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_layout(const InputArgs& in, const std::string& viz_name, std::uint64_t seed) {
    Network net = read_network(in);
    auto viz = parse_viz(viz_name);
    if (!viz) throw std::runtime_error("unknown visualization '" + viz_name + "'");
    NodeOrdering order = barycenter_order(net);
    NodeCoordinates coords = force_layout(net, seed);
    std::cout << to_json(mark_geometry(net, *viz, &order, &coords)).dump(2) << "\n";
    return 0;
}

int cmd_cheatsheet(const std::string& which, const std::string& out, const std::string& repo_path) {
    auto repo = PatternRepository::load(repository_path(repo_path));
    std::vector<Viz> views;
    if (which == "all") {
        views.assign(kAllViz.begin(), kAllViz.end());
        fs::create_directories(out);
    } else if (auto v = parse_viz(which)) {
        views.push_back(*v);
    } else {
        throw std::runtime_error("unknown visualization '" + which + "'");
    }
    for (Viz v : views) {
        fs::path path = which == "all" ? fs::path(out) / ("cheatsheet-" + to_string(v) + ".html") : fs::path(out);
        std::ofstream file(path, std::ios::binary);
        file << export_cheatsheet(repo, v);
        if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
        std::cout << path.string() << "\n";
    }
    return 0;
}

int cmd_serve(const std::string& host, int port, const std::string& data_dir, const std::string& repo_path) {
    Service service(PatternRepository::load(repository_path(repo_path)));
    if (!data_dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(data_dir)) {
            auto ext = e.path().extension();
            if (e.is_regular_file() && (ext == ".csv" || ext == ".json") && e.path().stem() != "pattern_repository")
                files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            std::ifstream in(f, std::ios::binary);
            try {
                service.store().add(f.stem().string(), load_network(in, format_for_path(f.string())));
                std::cerr << "loaded " << f.stem().string() << "\n";
            } catch (const Error& e) {
                std::cerr << "skipped " << f.string() << ": " << e.what() << "\n";
            }
        }
    }
    httplib::Server server;
    mount(server, service);
    int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
    std::cout << "listening on http://" << host << ":" << bound << std::endl;
    return server.listen_after_bind() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern explanation toolkit"};
    app.require_subcommand(1);

    InputArgs input;
    bool table = false;
    std::string viz = "node-link", which, out, repo, data_dir, host = "127.0.0.1";
    std::uint64_t seed = 0;
    int port = 8080;

    auto* mine = app.add_subcommand("mine", "list every pattern instance of a network");
    add_input(mine, input);
    mine->add_flag("--table", table, "human-readable table instead of json");

    auto* order = app.add_subcommand("order", "print the barycenter node ordering");
    add_input(order, input);

    auto* layout = app.add_subcommand("layout", "print the mark geometry of one view");
    add_input(layout, input);
    layout->add_option("--viz", viz, "node-link, matrix or time-arcs");
    layout->add_option("--seed", seed, "layout seed");

    auto* sheet = app.add_subcommand("cheatsheet", "write html cheat sheets");
    sheet->add_option("viz", which, "a visualization or 'all'")->required();
    sheet->add_option("out", out, "output file, or directory with 'all'")->required();
    sheet->add_option("--repo", repo, "pattern repository file");

    auto* serve = app.add_subcommand("serve", "run the http service");
    serve->add_option("--port", port, "0 picks a free port");
    serve->add_option("--host", host);
    serve->add_option("--data-dir", data_dir, "preload networks, id = file name without extension");
    serve->add_option("--repo", repo, "pattern repository file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*mine) return cmd_mine(input, table);
        if (*order) return cmd_order(input);
        if (*layout) return cmd_layout(input, viz, seed);
        if (*sheet) return cmd_cheatsheet(which, out, repo);
        if (*serve) return cmd_serve(host, port, data_dir, repo);
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
