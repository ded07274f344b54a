#include "memnet/gexf.hpp"

#include <cstdio>
#include <fstream>

#include "memnet/errors.hpp"

namespace memnet {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string fmt_weight(double w) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", w);
    return buf;
}

} // namespace

void export_gexf(const TemporalGraph& graph, std::ostream& out, const Partition* partition) {
    if (partition && partition->assignment.size() != graph.node_count()) {
        throw ShapeError("partition does not cover the graph");
    }
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
        << "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n";
    if (partition) {
        out << "    <attributes class=\"node\">\n"
            << "      <attribute id=\"0\" title=\"community\" type=\"integer\"/>\n"
            << "    </attributes>\n";
    }
    out << "    <nodes>\n";
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        out << "      <node id=\"" << i << "\" label=\""
            << xml_escape(graph.label(static_cast<NodeId>(i))) << "\"";
        if (partition) {
            out << ">\n        <attvalues><attvalue for=\"0\" value=\""
                << partition->assignment[i] << "\"/></attvalues>\n      </node>\n";
        } else {
            out << "/>\n";
        }
    }
    out << "    </nodes>\n    <edges>\n";
    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
        const auto& edge = graph.edges()[e];
        out << "      <edge id=\"" << e << "\" source=\"" << edge.a << "\" target=\"" << edge.b
            << "\" weight=\"" << fmt_weight(edge.weight) << "\"/>\n";
    }
    out << "    </edges>\n  </graph>\n</gexf>\n";
    if (!out) throw IoError("gexf write failed");
}

void export_gexf(const TemporalGraph& graph, const std::string& path,
                 const Partition* partition) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    export_gexf(graph, out, partition);
}

} // namespace memnet
