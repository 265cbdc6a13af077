#include "kgprobe/data_tables.hpp"

#include <fstream>
#include <string_view>

#include "kgprobe/error.hpp"

namespace kgprobe {

const std::vector<std::string>& default_negation_markers() {
    static const std::vector<std::string> markers = {
        "no",      "not",     "none",    "nor",      "no one",
        "nobody",  "nothing", "neither", "nowhere",  "never",
        "hardly",  "barely",  "scarcely", "non",     "without",
        "fail",    "cannot",  "cant",    "no longer", "dont",
        "wont",
    };
    return markers;
}

const std::unordered_set<std::string>& default_stopwords() {
    // Function words only: pronouns, determiners, auxiliaries, prepositions,
    // conjunctions. Quantity adjectives (few, many, more) are deliberately
    // absent so spans like "few seeds" keep their content.
    static const std::unordered_set<std::string> words = {
        // pronouns
        "i", "me", "my", "mine", "myself", "we", "us", "our", "ours",
        "ourselves", "you", "your", "yours", "yourself", "yourselves", "he",
        "him", "his", "himself", "she", "her", "hers", "herself", "it", "its",
        "itself", "they", "them", "their", "theirs", "themselves", "who",
        "whom", "whose", "which", "what", "this", "that", "these", "those",
        "someone", "something", "anyone", "anything", "everyone", "everything",
        // determiners
        "a", "an", "the", "any", "each", "every", "either", "some", "such",
        "both", "all",
        // auxiliaries and copulas
        "am", "is", "are", "was", "were", "be", "been", "being", "have",
        "has", "had", "having", "do", "does", "did", "doing", "will", "would",
        "shall", "should", "can", "could", "may", "might", "must", "ought",
        // prepositions
        "of", "in", "on", "at", "by", "for", "with", "about", "against",
        "between", "among", "into", "through", "during", "before", "after",
        "above", "below", "to", "from", "up", "down", "out", "off", "over",
        "under", "onto", "upon", "across", "along", "around", "behind",
        "beside",
        // conjunctions and discourse glue
        "and", "or", "but", "if", "because", "as", "until", "while", "than",
        "then", "once", "so", "though", "although", "whether", "there",
        "here", "when", "where", "why", "how", "again", "further", "also",
        "just", "very", "too", "quite", "rather",
    };
    return words;
}

namespace {

std::unordered_map<std::string, std::string> expand_groups(
    std::initializer_list<std::initializer_list<const char*>> groups) {
    std::unordered_map<std::string, std::string> map;
    for (const auto& group : groups) {
        const char* label = *group.begin();
        for (const char* rel : group) map.emplace(rel, label);
    }
    return map;
}

}  // namespace

const std::unordered_map<std::string, std::string>& relation_merge_seventeen() {
    static const auto map = expand_groups({
        {"atlocation", "locatednear"},
        {"capableof"},
        {"createdby"},
        {"desires"},
        {"hascontext"},
        {"hasproperty"},
        {"antonym", "distinctfrom"},
        {"relatedto", "similarto", "synonym"},
        {"hassubevent", "hasfirstsubevent", "haslastsubevent",
         "hasprerequisite", "entails", "mannerof"},
        {"usedfor"},
        {"receivesaction"},
        {"madeof"},
        {"partof", "hasa"},
        {"notdesires"},
        {"notcapableof"},
        {"isa", "instanceof", "definedas"},
        {"causes", "causesdesire", "motivatedbygoal"},
        // association labels pass through untouched
        {"forwardassociated"},
        {"mutualassociated"},
    });
    return map;
}

const std::unordered_map<std::string, std::string>& relation_merge_seven() {
    static const auto map = expand_groups({
        {"capableof"},
        {"usedfor", "receivesaction"},
        {"atlocation", "locatednear", "hascontext", "similarto"},
        {"causes", "causesdesire", "motivatedbygoal", "desires"},
        {"antonym", "distinctfrom", "notcapableof", "notdesires"},
        {"isa", "hasproperty", "madeof", "partof", "definedas", "instanceof",
         "hasa", "createdby", "relatedto", "synonym"},
        {"hassubevent", "hasfirstsubevent", "haslastsubevent",
         "hasprerequisite", "entails", "mannerof"},
        {"forwardassociated"},
        {"mutualassociated"},
    });
    return map;
}

const std::unordered_map<std::string, std::string>& default_lemma_exceptions() {
    static const std::unordered_map<std::string, std::string> map = {
        // irregular verbs (past, participle, -ing where rules fall short)
        {"ate", "eat"}, {"eaten", "eat"}, {"began", "begin"},
        {"begun", "begin"}, {"bit", "bite"}, {"bitten", "bite"},
        {"blew", "blow"}, {"blown", "blow"}, {"bought", "buy"},
        {"broke", "break"}, {"broken", "break"}, {"brought", "bring"},
        {"built", "build"}, {"came", "come"}, {"caught", "catch"},
        {"chose", "choose"}, {"chosen", "choose"}, {"did", "do"},
        {"done", "do"}, {"drank", "drink"}, {"drunk", "drink"},
        {"drew", "draw"}, {"drawn", "draw"}, {"drove", "drive"},
        {"driven", "drive"}, {"dug", "dig"}, {"fed", "feed"},
        {"fell", "fall"}, {"fallen", "fall"}, {"felt", "feel"},
        {"flew", "fly"}, {"flown", "fly"}, {"forgot", "forget"},
        {"forgotten", "forget"}, {"found", "find"}, {"froze", "freeze"},
        {"frozen", "freeze"}, {"gave", "give"}, {"given", "give"},
        {"got", "get"}, {"gotten", "get"}, {"grew", "grow"},
        {"grown", "grow"}, {"heard", "hear"}, {"held", "hold"},
        {"hid", "hide"}, {"hidden", "hide"}, {"hung", "hang"},
        {"kept", "keep"}, {"knew", "know"}, {"known", "know"},
        {"lay", "lie"}, {"led", "lead"}, {"left", "leave"},
        {"lost", "lose"}, {"made", "make"}, {"meant", "mean"},
        {"met", "meet"}, {"paid", "pay"}, {"ran", "run"},
        {"rang", "ring"}, {"rode", "ride"}, {"ridden", "ride"},
        {"rose", "rise"}, {"risen", "rise"}, {"said", "say"},
        {"sang", "sing"}, {"sat", "sit"}, {"saw", "see"},
        {"seen", "see"}, {"sent", "send"}, {"shot", "shoot"},
        {"slept", "sleep"}, {"sold", "sell"}, {"spent", "spend"},
        {"spoke", "speak"}, {"spoken", "speak"}, {"stood", "stand"},
        {"stuck", "stick"}, {"struck", "strike"}, {"swam", "swim"},
        {"swept", "sweep"}, {"swum", "swim"}, {"taught", "teach"},
        {"threw", "throw"}, {"thrown", "throw"}, {"told", "tell"},
        {"took", "take"}, {"taken", "take"}, {"understood", "understand"},
        {"went", "go"}, {"woke", "wake"}, {"woken", "wake"},
        {"won", "win"}, {"wore", "wear"}, {"worn", "wear"},
        {"wrote", "write"}, {"written", "write"},
        // -e verbs the suffix rules cannot restore
        {"baking", "bake"}, {"baked", "bake"}, {"biking", "bike"},
        {"creating", "create"}, {"created", "create"}, {"deciding", "decide"},
        {"decided", "decide"}, {"hiding", "hide"}, {"hoping", "hope"},
        {"hoped", "hope"}, {"inviting", "invite"}, {"invited", "invite"},
        {"liking", "like"}, {"liked", "like"}, {"making", "make"},
        {"providing", "provide"}, {"provided", "provide"}, {"riding", "ride"},
        {"sliding", "slide"}, {"smoking", "smoke"}, {"smoked", "smoke"},
        {"taking", "take"}, {"tasting", "taste"}, {"tasted", "taste"},
        {"waking", "wake"}, {"wasting", "waste"}, {"wasted", "waste"},
        {"writing", "write"},
        // irregular plurals
        {"children", "child"}, {"feet", "foot"}, {"geese", "goose"},
        {"halves", "half"}, {"knives", "knife"}, {"leaves", "leaf"},
        {"lives", "life"}, {"loaves", "loaf"}, {"men", "man"},
        {"mice", "mouse"}, {"people", "person"}, {"shelves", "shelf"},
        {"teeth", "tooth"}, {"wives", "wife"}, {"wolves", "wolf"},
        {"women", "woman"},
    };
    return map;
}

std::vector<std::string> load_line_list(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::io_error, "cannot open " + file.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> load_pair_table(
    const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(Errc::io_error, "cannot open " + file.string());
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error(Errc::malformed_row,
                        "expected two tab-separated columns in " +
                            file.string());
        out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return out;
}

}  // namespace kgprobe
