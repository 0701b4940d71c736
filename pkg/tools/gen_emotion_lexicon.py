#!/usr/bin/env python3
"""Regenerate src/tweetnorm/data/emotion_lexicon.tsv.

Hand-curated keyword lists, roughly two hundred surface forms per class.
This approximates the kind of lexicon the reference emotion library uses
internally; it is NOT a clone of it. Every word maps to exactly one class,
so resolve any cross-class candidates here before regenerating.
"""

from pathlib import Path

ANGRY = """
abhor abhorred abhors aggravate aggravated aggravates aggravating aggravation
agitated agitation anger angered angering angers angrier angriest angrily angry
annoy annoyance annoyances annoyed annoying annoys argue argued argues arguing
argument arguments betrayal betrayed bitter bitterly bitterness bothered
bothering brutal bullied bullies bully bullying contempt contemptuous cross
cruel cruelty despise despised despises detest detested detests disdain disgust
disgusted disgusting disgusts displeased displeasure disrespect disrespected
disrespectful enrage enraged enrages enraging envious envy exasperated
exasperating exasperation fierce frustrate frustrated frustrates frustrating
frustration frustrations fume fumed fumes fuming furious furiously fury glare
glared glares glaring grouchy growl growled growling growls grudge grudges
grumpy harass harassed harassment hate hated hateful hates hating hatred
hostile hostility indignant indignation infuriate infuriated infuriates
infuriating insult insulted insulting insults irate irk irked irks irritate
irritated irritates irritating irritation jealous jealousy livid loathe loathed
loathes loathing mad madden maddened maddening moody nagging obnoxious offended
offensive outrage outraged outrageous outrages pissed pout pouted pouting pouts
provoke provoked provokes provoking quarrel quarreled quarreling quarrels rage
raged rages raging resent resented resentful resentment resents revenge
ruthless sarcastic savage scorn scorned scornful seethe seethed seething snappy
snarl snarled snarling snarls spite spiteful steamed stormed storming sulk
sulked sulking sulks tantrum tantrums temper vengeance vengeful vex vexed
vexing violence violent wrath wrathful
"""

FEAR = """
afraid alarm alarmed alarming alarms anxiety anxious anxiously apprehension
apprehensive apprehensively caution cautious chicken chills coward cowardice
cowardly creeped creeps creepy cringe cringed cringes cringing danger dangerous
dangerously dangers daunted daunting desperate dismay dismayed distress
distressed distressing doubt doubtful doubts dread dreaded dreadful dreading
dreads dubious eerie fear feared fearful fearfully fearfulness fearing fears
fearsome frantic fright frighten frightened frightening frightens frightful
goosebumps haunted haunting haunts helpless hesitant hesitate hesitated
hesitates hesitating horrible horribly horrid horrified horrifies horrify
horrifying horror horrors insecure insecurity intimidate intimidated
intimidates intimidating intimidation jitters jittery jumpy menace menacing
nervous nervously nervousness nightmare nightmares ominous panic panicked
panicking panicky panics paranoia paranoid peril perilous petrified petrify
phobia phobias phobic quiver quivered quivering quivers risk risky risks scare
scared scares scarier scariest scaring scary shaken shaky shiver shivered
shivering shivers shriek shrieked shrieking shrieks shudder shuddered
shuddering shudders sinister spooked spooky stress stressed stressful stressing
suspense tense tension terrified terrifies terrify terrifying terror terrorize
terrorized terrors threat threaten threatened threatening threatens threats
timid trauma traumatic traumatized tremble trembled trembles trembling uneasy
unsafe unsettling vulnerability vulnerable wary worried worries worrisome worry
worrying
"""

HAPPY = """
admire admired admires adorable adore adored adores amazing amused amusement
amusing awesome beautiful beautifully beauty best bless blessed blessing
blessings bliss blissful bright brilliant celebrate celebrated celebrates
celebrating celebration celebrations charming cheer cheered cheerful cheering
cheers cheery cherish cherished chuckle chuckled chuckles chuckling comfort
comfortable comforting congrats congratulate congratulations content contented
contentment cool cuddle cuddled cuddles cute delight delighted delightful
delightfully delights ecstatic elated elation enjoy enjoyable enjoyed enjoying
enjoys enthusiasm enthusiastic euphoria euphoric excellent excite excited
excitement exciting fabulous fantastic festive fond fun funny giggle giggled
giggles giggling glad gladly glee gleeful glorious glory glowing good goodness
gorgeous grand grateful gratitude great grin grinned grinning grins happier
happiest happily happiness happy heart heartwarming hilarious hooray hope hoped
hopeful hopes hoping hug hugged hugging hugs hurray jolly joke joked jokes
joking joy joyful joyfully joyous jubilant kind kindness kiss kissed kisses
kissing laugh laughed laughing laughs laughter like liked likes lovable love
loved lovely loves loving lucky marvelous merrily merry nice optimism
optimistic paradise peace peaceful perfect play played playful playing plays
pleasant pleased pleasure positive pretty pride proud proudly radiant rejoice
rejoiced rejoices rejoicing relaxed relief relieved satisfaction satisfied
satisfying smile smiled smiles smiley smiling smitten splendid succeed
succeeded success successful sunshine sweet sweetest terrific thank thanked
thankful thanks thrill thrilled thrilling triumph triumphant vibrant victorious
victory warm warmth welcome win winking winner winning wins won wonderful
wonderfully yay
"""

SAD = """
abandon abandoned abandonment ache ached aches aching agonizing agony alone
anguish anguished apathetic apathy ashamed bereaved bleak broken brokenhearted
burden burdened cried cries crushed cry crying dark darkness defeat defeated
dejected demoralized depress depressed depressing depression despair despairing
devastated devastating disappoint disappointed disappointing disappointment
disappointments disappoints discouraged disheartened dismal doom doomed down
downcast downhearted dreary dull embarrassed embarrassment emptiness empty
exhausted exhausting fail failed failing fails failure failures fatigue
fatigued forgotten forlorn gloom gloomy grief grieve grieved grieves grieving
grim guilt guilty heartache heartbreak heartbreaking heartbroken heartsick
homesick hopeless hopelessness hurt hurting hurts inconsolable isolated
isolation lament lamented loneliness lonely lonesome longing loser loss losses
lost low melancholy miserable miserably misery misfortune miss missed misses
missing mourn mourned mourning mourns neglect neglected numb pain pained
painful painfully pains pathetic pity regret regretful regrets regretted
regretting rejected rejection remorse sad sadden saddened saddening sadder
saddest sadly sadness shame shameful sob sobbed sobbing sobs sorrow sorrowful
sorrows sorry suffer suffered suffering suffers tear tearful tears tired
tiresome tragedy tragic troubled unfortunate unfortunately unhappy unloved
unlucky upset upsetting weary weep weeping weeps wept woe woeful woes wretched
"""

SURPRISE = """
aback abrupt abruptly amaze amazed amazement amazes amazingly ambush ambushed
anomalous anomaly astonish astonished astonishes astonishing astonishingly
astonishment astound astounded astounding astounds awe awed awestruck baffle
baffled baffles baffling bewilder bewildered bewildering bewilderment bizarre
bombshell breathtaking confound confounded confuse confused confusing confusion
curiosity curious curveball dazed dazzle dazzled dazzling disbelief dizzy
dumbfounded dumbstruck exclaim exclaimed exclaims extraordinary flabbergasted
flummoxed freak freakish gasp gasped gasping gasps gee gobsmacked golly gosh
huh implausible improbable incredible incredibly incredulous inexplicable
inexplicably jolt jolted jolting jolts marvel marveled marveling marvels
mindblowing mindboggling miracle miracles miraculous mysterious mystery
mystified mystifying newfound nonplussed novel novelty odd oddities oddity
oddly omg outlandish overwhelmed overwhelming paradox paradoxical peculiar
perplexed perplexing phenomenal rare rarity remarkable remarkably revelation
shock shocked shocker shockers shocking shocks speechless spectacle staggered
staggering startle startled startles startling startlingly strange strangely
stun stunned stunner stunners stunning stuns stupefied sudden suddenly surprise
surprised surprises surprising surprisingly surreal unannounced unanticipated
unbelievable unbelievably uncanny unconventional unexpected unexpectedly
unfamiliar unforeseen unheard unimaginable unorthodox unpredictable unreal
unthinkable unusual unusually weird weirdest whirlwind whoa wondered wondering
wonders wondrous wow wowed wows yikes
"""

CLASSES = {
    "angry": ANGRY,
    "fear": FEAR,
    "happy": HAPPY,
    "sad": SAD,
    "surprise": SURPRISE,
}


def main():
    seen = {}
    rows = []
    for label, blob in CLASSES.items():
        words = blob.split()
        for w in words:
            assert w == w.lower() and w.isalpha(), w
            assert w not in seen, f"{w!r} in both {seen.get(w)} and {label}"
            seen[w] = label
        print(f"{label}: {len(words)} words")
        rows.extend((w, label) for w in words)

    rows.sort()
    out = Path(__file__).resolve().parent.parent / "src" / "tweetnorm" / "data" / "emotion_lexicon.tsv"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# word -> emotion class (angry|fear|happy|sad|surprise)\n")
        fh.write("# version=emotion-lexicon-1\n")
        for w, label in rows:
            fh.write(f"{w}\t{label}\n")
    print(f"wrote {len(rows)} entries to {out}")


if __name__ == "__main__":
    main()
