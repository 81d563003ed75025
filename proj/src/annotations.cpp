#include "taxolint/annotations.hpp"

#include <algorithm>
#include <sstream>

#include "taxolint/errors.hpp"

namespace taxolint {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

void apply_token(MetaProfile& p, const std::string& tok, std::size_t line_no) {
    if (tok == "+R") p.rigidity = Rigidity::Rigid;
    else if (tok == "-R") p.rigidity = Rigidity::NonRigid;
    else if (tok == "~R") p.rigidity = Rigidity::AntiRigid;
    else if (tok == "+I:supplies") p.identity = Identity::SuppliesIc;
    else if (tok == "+I:carries") p.identity = Identity::CarriesIc;
    else if (tok == "-I") p.identity = Identity::NoIc;
    else if (tok == "+D") p.dependence = Dependence::Dependent;
    else if (tok == "-D") p.dependence = Dependence::Independent;
    else if (tok == "+ND" || tok.rfind("+ND:", 0) == 0) {
        p.notional_dependence = NotionalDep::Dependent;
        if (tok.size() > 4) p.nd_target = tok.substr(4);
    } else if (tok == "-ND") p.notional_dependence = NotionalDep::NotDependent;
    else if (tok == "+U") p.unity = Unity::Unity;
    else if (tok == "~U") p.unity = Unity::AntiUnity;
    else if (tok == "*U") p.unity = Unity::WholeNoCommonRelation;
    else if (tok == "+E") p.extensionality = Extensionality::Extensional;
    else if (tok == "~E") p.extensionality = Extensionality::AntiExtensional;
    else if (tok == "+C") p.concreteness = Concreteness::Concrete;
    else if (tok == "~C") p.concreteness = Concreteness::NonConcrete;
    else if (tok == "META") p.meta_level = true;
    else throw ParseError(line_no, "unknown profile token '" + tok + "'");
}

}  // namespace

ParsedAnnotations parse_annotations(std::istream& in) {
    ParsedAnnotations out;
    AnnotationSet& ann = out.annotations;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;

        const std::string& tag = tokens[0];
        if (tag == "P") {
            if (tokens.size() < 2) throw ParseError(line_no, "profile line needs a name");
            MetaProfile p;
            for (std::size_t i = 2; i < tokens.size(); ++i)
                apply_token(p, tokens[i], line_no);
            if (ann.profiles.count(tokens[1])) {
                out.warnings.push_back("line " + std::to_string(line_no) +
                                       ": duplicate profile for " + tokens[1] +
                                       " (last one wins)");
            }
            ann.profiles[tokens[1]] = p;
        } else if (tag == "I") {
            if (tokens.size() != 2) throw ParseError(line_no, "individual line needs exactly a name");
            ann.individuals.insert(tokens[1]);
        } else if (tag == "A") {
            if (tokens.size() != 3) throw ParseError(line_no, "assignment line needs a name and a category");
            const auto cat = category_from_string(tokens[2]);
            if (!cat) throw ParseError(line_no, "unknown category '" + tokens[2] + "'");
            ann.category_assignments[tokens[1]] = *cat;
        } else if (tag == "M") {
            if (tokens.size() != 4) throw ParseError(line_no, "mapping line needs name, directive, target");
            DirectiveKind kind;
            if (tokens[2] == "COVER") kind = DirectiveKind::Cover;
            else if (tokens[2] == "REJECT") kind = DirectiveKind::Reject;
            else if (tokens[2] == "IMPORT") kind = DirectiveKind::Import;
            else throw ParseError(line_no, "unknown directive '" + tokens[2] + "'");
            ann.directives.push_back({tokens[1], kind, tokens[3]});
        } else {
            throw ParseError(line_no, "unknown line tag '" + tag + "'");
        }
    }

    for (const auto& name : ann.individuals) {
        auto it = ann.profiles.find(name);
        if (it != ann.profiles.end() && it->second.rigidity != Rigidity::Unknown)
            throw ConflictError(name);
    }
    return out;
}

MetaProfile effective_profile(ConceptId id, const Taxonomy& taxonomy,
                              const AnnotationSet& annotations) {
    MetaProfile p;
    if (const auto* own = annotations.profile_of(taxonomy.concept_of(id).name)) p = *own;
    if (p.identity == Identity::NoIc || p.identity == Identity::Unknown) {
        for (ConceptId a : taxonomy.ancestors(id)) {
            const auto* ap = annotations.profile_of(taxonomy.concept_of(a).name);
            if (ap && ap->identity == Identity::SuppliesIc) {
                p.identity = Identity::CarriesIc;
                break;
            }
        }
    }
    return p;
}

std::string describe(const Suggestion& s) {
    static const char* names[] = {"R", "U", "E", "C"};
    const char* f = names[static_cast<int>(s.property)];
    std::string text = s.forbid_anti
        ? std::string("cannot be anti-") + f
        : std::string("cannot be +") + f + " (with necessity)";
    text += " (witness:";
    for (const auto& w : s.witnesses) text += " " + w;
    text += ")";
    return text;
}

std::vector<Suggestion> suggest_from_children(ConceptId id, const Taxonomy& taxonomy,
                                              const AnnotationSet& annotations) {
    // positive[i] / anti[i] collect witnesses per property, in the
    // SuggestedProperty order.
    std::vector<std::string> positive[4], anti[4];
    for (ConceptId d : taxonomy.descendants(id)) {
        const MetaProfile p = effective_profile(d, taxonomy, annotations);
        const std::string& name = taxonomy.concept_of(d).name;
        if (p.rigidity == Rigidity::Rigid) positive[0].push_back(name);
        if (p.rigidity == Rigidity::AntiRigid) anti[0].push_back(name);
        if (p.unity == Unity::Unity || p.unity == Unity::WholeNoCommonRelation)
            positive[1].push_back(name);
        if (p.unity == Unity::AntiUnity) anti[1].push_back(name);
        if (p.extensionality == Extensionality::Extensional) positive[2].push_back(name);
        if (p.extensionality == Extensionality::AntiExtensional) anti[2].push_back(name);
        if (p.concreteness == Concreteness::Concrete) positive[3].push_back(name);
        if (p.concreteness == Concreteness::NonConcrete) anti[3].push_back(name);
    }
    std::vector<Suggestion> result;
    for (int i = 0; i < 4; ++i) {
        const auto prop = static_cast<SuggestedProperty>(i);
        if (!positive[i].empty()) result.push_back({prop, true, positive[i]});
        if (!anti[i].empty()) result.push_back({prop, false, anti[i]});
    }
    return result;
}

}  // namespace taxolint
